#include <doctest.h>

#include <algorithm>

#include "bgm/endcurves.hpp"
#include "support.hpp"

using namespace bgm;
using testing_support::pts;

namespace {

const Field P(65521);

Curve coker_formula(const Curve& I) {
    Curve c;
    for (auto a : I)
        if (!I.count(a - EXY)) c.insert(a);
    return c;
}

Curve ker_formula(const Curve& I) {
    Curve c;
    for (auto a : I)
        if (!I.count(a + EXY)) c.insert(a + EXY);
    return c;
}

GridModule sample_module(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int g = 1 + int(rng() % 3), r = int(rng() % 4);
    return evaluate_presentation(random_presentation(P, g, r, {{0, 0}, {4, 4}}, seed), {{0, 0}, {4, 4}});
}

}  // namespace

TEST_SUITE("endcurves") {

TEST_CASE("kernels and cokernels of the simple module") {
    GridModule S = spread_module(P, pts({{0, 0}}), {{0, 0}, {0, 0}});
    CHECK(coker_xy(S).support() == pts({{0, 0}}));
    CHECK(ker_xy(S).support() == pts({{1, 1}}));
    CHECK(ker_x(S).support() == pts({{1, 0}}));
    CHECK(ker_y(S).support() == pts({{0, 1}}));
    CHECK(topleft(S).support() == pts({{0, 1}}));
    CHECK(botright(S).support() == pts({{1, 0}}));
    CHECK(births(S) == CurveMultiset{pts({{0, 0}})});
    CHECK(deaths(S) == CurveMultiset{pts({{1, 1}})});
}

TEST_CASE("square spread") {
    GridModule Q = spread_module(P, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {{0, 0}, {2, 2}});
    CHECK(coker_xy(Q).support() == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(ker_xy(Q).support() == pts({{2, 1}, {1, 2}, {2, 2}}));
    CHECK(coker_x(Q).support() == pts({{0, 0}, {0, 1}}));
    CHECK(ker_x(Q).support() == pts({{2, 0}, {2, 1}}));
    CHECK(coker_y(Q).support() == pts({{0, 0}, {1, 0}}));
    CHECK(ker_y(Q).support() == pts({{0, 2}, {1, 2}}));
    CHECK(as_multiset(topleft(Q)) == std::vector<Bigrade>{{0, 2}});
    CHECK(as_multiset(botright(Q)) == std::vector<Bigrade>{{2, 0}});
    CHECK(births(Q) == CurveMultiset{pts({{0, 0}, {1, 0}, {0, 1}})});
    CHECK(deaths(Q) == CurveMultiset{pts({{2, 1}, {2, 2}, {1, 2}})});
    CHECK(shift_curves(deaths(Q), -EXY) == CurveMultiset{pts({{1, 0}, {1, 1}, {0, 1}})});
}

TEST_CASE("free module truncated to a window") {
    Window w{{0, 0}, {3, 3}};
    GridModule M = evaluate_presentation(free_presentation(P, {{0, 0}}), w);
    CurveMultiset hook = {pts({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}})};
    CHECK(births(M) == hook);
    CHECK(coker_xy(M).support() == hook[0]);
    // interior corners only appear at the clip
    for (auto p : topleft(M).support()) CHECK(p.y == 4);
    for (auto p : botright(M).support()) CHECK(p.x == 4);
}

TEST_CASE("corners of curves") {
    auto s = corners(pts({{2, 3}}));
    CHECK(s.convex == pts({{2, 3}}));
    CHECK(s.concave == pts({{2, 3}}));
    CHECK(s.inner_convex.empty());
    CHECK(s.inner_concave.empty());
    auto L = corners(pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(L.convex == pts({{0, 0}}));
    CHECK(L.inner_convex == pts({{0, 0}}));
    CHECK(L.concave == pts({{1, 0}, {0, 1}}));
    CHECK(L.inner_concave.empty());
    auto h = corners(pts({{0, 0}, {1, 0}}));
    CHECK(h.convex == pts({{0, 0}}));
    CHECK(h.concave == pts({{1, 0}}));
    CHECK(h.inner_convex.empty());
    CHECK(h.inner_concave.empty());
}

TEST_CASE("exact sequence contracts") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GridModule M = sample_module(seed);
        GridModule K = ker_xy(M), C = coker_xy(M);
        CHECK(is_ephemeral(K));
        CHECK(is_ephemeral(C));
        CHECK(is_x_annihilated(ker_x(M)));
        CHECK(is_x_annihilated(coker_x(M)));
        CHECK(is_y_annihilated(ker_y(M)));
        CHECK(is_y_annihilated(coker_y(M)));
        CHECK(is_x_annihilated(topleft(M)));
        CHECK(is_y_annihilated(topleft(M)));
        CHECK(is_x_annihilated(botright(M)));
        CHECK(is_y_annihilated(botright(M)));
        for (auto p : M.w.points()) {
            int r = rank(P, M.map(p, p + EXY));
            CHECK(K.dim(p + EXY) + r == M.dim(p));
            CHECK(C.dim(p + EXY) + r == M.dim(p + EXY));
        }
    }
}

TEST_CASE("decompose_ephemeral") {
    Window w{{0, 0}, {3, 3}};
    CHECK(decompose_ephemeral(GridModule(P, w)).empty());
    auto I = pts({{0, 1}, {1, 1}, {1, 0}}), J = pts({{1, 1}, {1, 2}, {2, 1}});
    GridModule M = direct_sum(spread_module(P, I, w), spread_module(P, J, w));
    CurveMultiset want{I, J};
    std::sort(want.begin(), want.end());
    CHECK(decompose_ephemeral(M) == want);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) CHECK(decompose_ephemeral(testing_support::base_change(M, rng)) == want);
    CHECK_THROWS_AS(decompose_ephemeral(spread_module(P, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), w)),
                    precondition_error);
}

TEST_CASE("curves of random modules") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GridModule M = sample_module(seed);
        CurveMultiset b = births(M), d = deaths(M);
        CHECK(b.size() == d.size());
        for (const Curve& c : b) CHECK(is_spread_curve(c));
        for (const Curve& c : d) CHECK(is_spread_curve(c));
        // reassembling the curves recovers the ephemeral module
        GridModule C = coker_xy(M), R(P, C.w);
        for (const Curve& c : b) R = direct_sum(R, spread_module(P, c, C.w));
        CHECK(same_dims_and_ranks(C, R));
        CHECK(as_multiset(topleft(M)) == as_multiset(topleft(C)));
        CHECK(as_multiset(botright(M)) == as_multiset(botright(C)));
    }
}

TEST_CASE("births and deaths are additive") {
    GridModule A = sample_module(101), B = sample_module(202);
    auto join = [](CurveMultiset x, const CurveMultiset& y) {
        x.insert(x.end(), y.begin(), y.end());
        std::sort(x.begin(), x.end());
        return x;
    };
    GridModule S = direct_sum(A, B);
    CHECK(births(S) == join(births(A), births(B)));
    CHECK(deaths(S) == join(deaths(A), deaths(B)));
}

TEST_CASE("spread formulas on 200 random spreads") {
    std::mt19937_64 rng(17);
    Window w{{0, 0}, {6, 6}};
    for (int t = 0; t < 200; ++t) {
        Curve I = testing_support::random_spread(w, rng);
        GridModule k = spread_module(P, I, w);
        CHECK(births(k) == CurveMultiset{coker_formula(I)});
        CHECK(deaths(k) == CurveMultiset{ker_formula(I)});
    }
}

TEST_CASE("presentation_cokerxy") {
    Presentation empty{P, {}, {}, Mat(0, 0)};
    CHECK(presentation_cokerxy(empty) == empty);
    Presentation hook = presentation_cokerxy(free_presentation(P, {{0, 0}}));
    CHECK(hook.gens == std::vector<Bigrade>{{0, 0}});
    CHECK(hook.rels == std::vector<Bigrade>{{1, 1}});
    Window w{{0, 0}, {4, 4}};
    CHECK(evaluate_presentation(hook, w).support() == coker_xy(evaluate_presentation(free_presentation(P, {{0, 0}}), w)).support());
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed);
        Presentation pr = random_presentation(P, 1 + int(rng() % 4), int(rng() % 5), {{0, 0}, {4, 4}}, seed);
        Presentation c = presentation_cokerxy(pr);
        CHECK(c.gens.size() == pr.gens.size());
        CHECK(c.rels.size() == pr.rels.size() + pr.gens.size());
        CHECK(same_dims_and_ranks(evaluate_presentation(c, w), coker_xy(evaluate_presentation(pr, w))));
    }
}

TEST_CASE("presentation_kerxy") {
    Window w{{0, 0}, {5, 5}};
    CHECK(evaluate_presentation(presentation_kerxy(free_presentation(P, {{0, 0}})), w).is_zero());
    Presentation simple{P, {{0, 0}}, {{1, 0}, {0, 1}}, Mat(1, 2)};
    simple.mat(0, 0) = simple.mat(0, 1) = 1;
    CHECK(evaluate_presentation(presentation_kerxy(simple), w).support() == pts({{1, 1}}));
    Presentation sq{P, {{0, 0}}, {{2, 0}, {0, 2}}, Mat(1, 2)};
    sq.mat(0, 0) = sq.mat(0, 1) = 1;
    CHECK(evaluate_presentation(presentation_kerxy(sq), w).support() == pts({{2, 1}, {2, 2}, {1, 2}}));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed);
        Presentation pr = random_presentation(P, 1 + int(rng() % 4), int(rng() % 5), {{0, 0}, {3, 3}}, seed);
        Presentation k = presentation_kerxy(pr);
        std::size_t nQ = pr.rels.size();
        CHECK(k.gens.size() <= 2 * nQ);
        CHECK(k.rels.size() <= 2 * nQ);
        GridModule K = ker_xy(evaluate_presentation(pr, w));
        CHECK(same_dims_and_ranks(evaluate_presentation(k, w), K));
    }
}

}  // TEST_SUITE
