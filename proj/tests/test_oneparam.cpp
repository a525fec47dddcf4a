#include <doctest.h>

#include "bgm/oneparam.hpp"
#include "support.hpp"

using namespace bgm;
using testing_support::from_rows;
using testing_support::pts;

TEST_SUITE("oneparam") {

TEST_CASE("bar counts") {
    Field F(2);
    CHECK(bar_count(bar_module(F, 0, 3)) == 1);
    CHECK(bar_count(LineModule{F, 0, {}, {}}) == 0);
    CHECK(bar_count(line_sum(bar_module(F, 0, 2), bar_module(F, 1, 4))) == 2);
}

TEST_CASE("barcodes") {
    Field F(3);
    CHECK(barcode(bar_module(F, 0, 3)) == std::vector<Bar>{{0, 3}});
    CHECK(barcode(LineModule{F, 0, {}, {}}).empty());
    LineModule A = line_module(F, 0, {1, 2, 1}, {from_rows({{1}, {0}}), from_rows({{1, 0}})});
    CHECK(barcode(A) == std::vector<Bar>{{0, 3}, {1, 2}});
    LineModule B = line_module(F, 0, {1, 2, 1}, {from_rows({{1}, {0}}), from_rows({{0, 1}})});
    CHECK(barcode(B) == std::vector<Bar>{{0, 2}, {1, 3}});
}

TEST_CASE("slices") {
    Field F(2);
    GridModule Q = spread_module(F, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {{0, 0}, {2, 2}});
    LineModule d = slice(Q, {{{0, 0}, {1, 1}, {2, 2}}});
    CHECK(barcode(d) == std::vector<Bar>{{0, 2}});
    LineModule miss = slice(Q, {{{2, 0}, {2, 1}, {2, 2}}});
    CHECK(miss.total_dim() == 0);
    CHECK(bar_count(miss) == 0);
    LineModule h = slice(Q, {{{0, 1}, {1, 1}, {2, 1}}});
    CHECK(h.zmap[0] == Q.xmap({0, 1}));
    CHECK(h.zmap[1] == Q.xmap({1, 1}));
    CHECK_THROWS_AS(slice(Q, {{{0, 0}, {3, 3}}}), contract_error);
}

TEST_CASE("bar count matches barcode size and restriction monotonicity") {
    Field F(5);
    std::mt19937_64 rng(4);
    Window w{{0, 0}, {3, 3}};
    for (int t = 0; t < 60; ++t) {
        Presentation pr = random_presentation(F, 1 + t % 4, t % 5, w, 100 + t);
        GridModule M = evaluate_presentation(pr, w);
        SlicePath l;
        Bigrade c{0, 0};
        l.points.push_back(c);
        while (c.x < 3 || c.y < 3) {
            if (c.y == 3 || (c.x < 3 && rng() % 2)) c = c + EX;
            else c = c + EY;
            l.points.push_back(c);
        }
        LineModule A = slice(M, l);
        CHECK(bar_count(A) == int(barcode(A).size()));
        // dim coker z = bar count = dim ker z on the shifted module
        int coker = 0, ker = 0;
        for (int i = 0; i < int(A.dims.size()); ++i) {
            int in = i > 0 ? rank(F, A.zmap[i - 1]) : 0;
            coker += A.dims[i] - in;
            ker += A.dims[i] - rank(F, A.zmap[i]);
        }
        CHECK(coker == bar_count(A));
        CHECK(ker == bar_count(A));
        // restrict along every other index
        SlicePath sub;
        for (std::size_t i = 0; i < l.points.size(); i += 2) sub.points.push_back(l.points[i]);
        CHECK(bar_count(slice(M, sub)) <= bar_count(A));
    }
}

}
