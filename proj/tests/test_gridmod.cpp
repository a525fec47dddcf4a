#include <doctest.h>

#include "bgm/gridmod.hpp"
#include "support.hpp"

using namespace bgm;
using testing_support::pts;

namespace {

Presentation simple_origin(const Field& F) {
    Presentation pr{F, {{0, 0}}, {{1, 0}, {0, 1}}, Mat(1, 2)};
    pr.mat(0, 0) = pr.mat(0, 1) = 1;
    return pr;
}

void all_commute(const GridModule& M) { CHECK_NOTHROW(M.check()); }

}  // namespace

TEST_SUITE("gridmod") {

TEST_CASE("spread modules") {
    Field F(2);
    GridModule S = spread_module(F, pts({{0, 0}}));
    CHECK(S.total_dim() == 1);
    GridModule Q = spread_module(F, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    all_commute(Q);
    CHECK(Q.map({0, 0}, {1, 1}) == Mat::identity(1));
    CHECK_THROWS_AS(spread_module(F, pts({{0, 0}, {1, 0}, {0, 2}})), invalid_spread);
    CHECK_FALSE(is_spread(pts({{1, 0}, {0, 1}})));
    CHECK_FALSE(is_spread(pts({{0, 0}, {1, 1}})));
}

TEST_CASE("evaluate presentations") {
    Field F(2);
    Window w{{0, 0}, {2, 2}};
    GridModule M = evaluate_presentation(free_presentation(F, {{0, 0}}), w);
    for (auto p : w.points()) CHECK(M.dim(p) == 1);
    CHECK(M.map({0, 0}, {2, 2}) == Mat::identity(1));

    Presentation hook{F, {{0, 0}}, {{2, 0}, {0, 2}, {1, 1}}, Mat(1, 3)};
    hook.mat(0, 0) = hook.mat(0, 1) = hook.mat(0, 2) = 1;
    GridModule H = evaluate_presentation(hook, w);
    CHECK(H.support() == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(H.map({0, 0}, {1, 0}) == Mat::identity(1));
    all_commute(H);

    Presentation collapse{F, {{0, 0}, {0, 0}}, {{0, 0}}, Mat(2, 1)};
    collapse.mat(0, 0) = collapse.mat(1, 0) = 1;
    GridModule C = evaluate_presentation(collapse, w);
    for (auto p : w.points()) CHECK(C.dim(p) == 1);

    Presentation bad{F, {{1, 1}}, {{0, 1}}, Mat(1, 1)};
    bad.mat(0, 0) = 1;
    CHECK_THROWS_AS(evaluate_presentation(bad, w), invalid_presentation);
}

TEST_CASE("shift translates support by -v") {
    Field F(2);
    GridModule S = spread_module(F, pts({{0, 0}}));
    CHECK(shift(S, {-1, -1}).support() == pts({{1, 1}}));
    CHECK(shift(S, {0, 0}).support() == S.support());
    GridModule Q = spread_module(F, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(shift(Q, {1, 0}).support() == pts({{-1, 0}, {0, 0}, {-1, 1}, {0, 1}}));
}

TEST_CASE("direct sums") {
    Field F(3);
    GridModule S = spread_module(F, pts({{0, 0}}));
    GridModule Z(F, Window{{0, 0}, {0, 0}});
    CHECK(same_dims_and_ranks(direct_sum(S, Z), S));
    CHECK(direct_sum(S, S).dim({0, 0}) == 2);
    GridModule Q = spread_module(F, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    GridModule H = spread_module(F, pts({{1, 1}, {2, 1}, {1, 2}}));
    GridModule QH = direct_sum(Q, H);
    all_commute(QH);
    for (auto p : QH.w.points()) CHECK(QH.dim(p) == Q.dim(p) + H.dim(p));
}

TEST_CASE("dualize reflects through the origin") {
    Field F(3);
    auto I = pts({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    GridModule D = dualize(spread_module(F, I));
    CHECK(D.support() == pts({{0, 0}, {-1, 0}, {-2, 0}, {0, -1}}));
    CHECK(same_dims_and_ranks(D, spread_module(F, D.support())));
    Presentation pr = random_presentation(F, 4, 4, {{0, 0}, {3, 3}}, 11);
    GridModule M = evaluate_presentation(pr, {{0, 0}, {3, 3}});
    GridModule DM = dualize(M);
    for (auto p : M.w.points()) {
        CHECK(DM.dim(-p) == M.dim(p));
        CHECK(rank(F, DM.xmap(-p - EX)) == rank(F, M.xmap(p)));
    }
    CHECK(same_dims_and_ranks(dualize(DM), M));
}

TEST_CASE("dual presentation") {
    Field F(5);
    Presentation fr = free_presentation(F, {{0, 0}});
    CHECK(syzygy(fr).grades.empty());
    CHECK_FALSE(is_finite_length(fr));

    Syzygy s = syzygy(simple_origin(F));
    REQUIRE(s.grades.size() == 1);
    CHECK(s.grades[0] == Bigrade{1, 1});
    Presentation d = dual_presentation(simple_origin(F));
    GridModule D = evaluate_presentation(d, {{-2, -2}, {2, 2}});
    CHECK(D.support() == pts({{0, 0}}));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Window w{{0, 0}, {2 + int(seed % 2), 3}};
        Presentation pr = random_presentation(F, 1 + int(seed % 4), int(seed % 5), w, seed);
        REQUIRE(is_finite_length(pr));
        GridModule M = evaluate_presentation(pr, w);
        Presentation dp = dual_presentation(pr);
        CHECK(syzygy(pr).grades.size() <= pr.rels.size());
        GridModule A = evaluate_presentation(dp, {-w.hi, -w.lo});
        CHECK(same_dims_and_ranks(A, dualize(M)));
    }
}

TEST_CASE("random presentations") {
    Field F(2);
    Window w{{0, 0}, {3, 3}};
    CHECK(random_presentation(F, 3, 4, w, 5) == random_presentation(F, 3, 4, w, 5));
    Presentation fr = random_presentation(F, 3, 0, w, 5, false);
    CHECK(fr.rels.empty());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Presentation pr = random_presentation(F, 1 + int(seed % 5), int(seed % 6), w, seed);
        CHECK_NOTHROW(pr.validate());
        GridModule M = evaluate_presentation(pr, {{-1, -1}, {5, 5}});
        all_commute(M);
        for (auto p : M.support()) CHECK(w.contains(p));
        // dimension at the window maximum versus the full relation matrix
        std::vector<int> gi, ri;
        for (int i = 0; i < int(pr.gens.size()); ++i)
            if (leq(pr.gens[i], w.hi)) gi.push_back(i);
        for (int j = 0; j < int(pr.rels.size()); ++j)
            if (leq(pr.rels[j], w.hi)) ri.push_back(j);
        CHECK(M.dim(w.hi) == int(gi.size()) - rank(F, pr.mat.rows_of(gi).cols_of(ri)));
    }
}

}
