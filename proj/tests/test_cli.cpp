#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bgm/cli.hpp"
#include "bgm/counts.hpp"
#include "bgm/io.hpp"
#include "support.hpp"

using namespace bgm;
using testing_support::pts;

namespace {

const Field P(65521);
const std::string DATA = TEST_DATA_DIR;

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int rc = run_cli(args, o, e);
    return {rc, o.str(), e.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

// dim H_i at p from ranks of the boundary matrices of the subcomplex
int betti_number(const Bifiltration& bf, int i, Bigrade p) {
    std::vector<std::vector<int>> lo, mid, hi;
    for (const auto& s : bf.simplices) {
        if (!leq(s.grade, p)) continue;
        int d = int(s.v.size()) - 1;
        if (d == i - 1) lo.push_back(s.v);
        if (d == i) mid.push_back(s.v);
        if (d == i + 1) hi.push_back(s.v);
    }
    auto bd = [&](const std::vector<std::vector<int>>& r, const std::vector<std::vector<int>>& c) {
        Mat m(int(r.size()), int(c.size()));
        for (int j = 0; j < int(c.size()); ++j)
            for (std::size_t k = 0; k < c[j].size() && c[j].size() > 1; ++k) {
                auto f = c[j];
                f.erase(f.begin() + k);
                int row = int(std::find(r.begin(), r.end(), f) - r.begin());
                m(row, j) = k % 2 ? P.neg(1) : 1;
            }
        return m;
    };
    return int(mid.size()) - rank(P, bd(lo, mid)) - rank(P, bd(mid, hi));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("presentation files") {
    Presentation f = parse_presentation("field p=65521\ngens\n0 0\nrels\n");
    CHECK(f == free_presentation(P, {{0, 0}}));
    std::ifstream in(DATA + "/square.pres");
    std::stringstream s;
    s << in.rdbuf();
    Presentation sq = parse_presentation(s.str());
    Window w{{0, 0}, {2, 2}};
    CHECK(same_dims_and_ranks(evaluate_presentation(sq, w), spread_module(P, pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), w)));
    CHECK_THROWS_AS(parse_presentation("field p=65521\ngens\n1 1\nrels\n0 3 : 0:2\n"), grade_error);
    // a zero entry below the generator is harmless
    CHECK_NOTHROW(parse_presentation("field p=65521\ngens\n1 1\nrels\n0 3 : 0:0\n"));
    try {
        parse_presentation("field p=65521\ngens\n0 0\nrels\n1 1 ; 0:1\n");
        FAIL("no syntax error");
    } catch (const syntax_error& e) {
        CHECK(e.line == 5);
    }
    CHECK_THROWS_AS(parse_presentation("field p=12\ngens\n"), field_error);
    CHECK_THROWS_AS(parse_presentation("gens\n0 0\n"), syntax_error);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Presentation pr = random_presentation(P, 1 + int(seed % 4), int(seed % 5), {{0, 0}, {3, 3}}, seed, seed % 2);
        CHECK(parse_presentation(serialize_presentation(pr)) == pr);
    }
}

TEST_CASE("module files") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GridModule M = testing_support::random_module(P, seed, {{0, 0}, {3, 3}});
        GridModule N = parse_module(serialize_module(M), Field(2));
        CHECK(N.F == P);
        CHECK(N.dims == M.dims);
        for (auto p : M.w.points()) {
            CHECK(N.xmap(p) == M.xmap(p));
            CHECK(N.ymap(p) == M.ymap(p));
        }
    }
    CHECK_THROWS_AS(parse_module("window 0 0 1 0\ndim 0 0 1\ndim 1 0 1\nxmap 0 0\n1 2\n", P), syntax_error);
    CHECK_THROWS_AS(parse_module("window 0 0 0 0\ndim 3 3 1\n", P), grade_error);
}

TEST_CASE("bifiltered homology") {
    Bifiltration tri = parse_bifiltration(
        "simplex 0 @ 0 0\nsimplex 1 @ 0 0\nsimplex 2 @ 0 0\nsimplex 0 1 @ 0 0\nsimplex 1 2 @ 0 0\nsimplex 0 2 @ 0 0\n");
    GridModule H = homology_module(P, tri, 1, {{0, 0}, {2, 2}});
    for (int d : H.dims) CHECK(d == 1);
    CHECK(n2(H) == 1);

    Bifiltration two = parse_bifiltration("simplex 0 @ 1 0\nsimplex 1 @ 0 1\n");
    GridModule H0 = homology_module(P, two, 0, {{0, 0}, {1, 1}});
    CHECK(H0.dim({0, 0}) == 0);
    CHECK(H0.dim({1, 0}) == 1);
    CHECK(H0.dim({0, 1}) == 1);
    CHECK(H0.dim({1, 1}) == 2);

    std::ifstream in(DATA + "/triangle.bif");
    std::stringstream s;
    s << in.rdbuf();
    Bifiltration st = parse_bifiltration(s.str());
    GridModule L = homology_module(P, st, 1, {{0, 0}, {3, 3}});
    for (auto p : L.w.points()) CHECK(L.dim(p) == (leq({1, 1}, p) && !leq({2, 2}, p) ? 1 : 0));
    CHECK(rank(P, L.map({1, 1}, {3, 1})) == 1);

    CHECK_THROWS_AS(parse_bifiltration("simplex 0 @ 1 1\nsimplex 1 @ 0 0\nsimplex 0 1 @ 0 1\n"), grade_error);
    CHECK_THROWS_AS(parse_bifiltration("simplex 0 1 @ 0 0\n"), grade_error);
    CHECK_THROWS_AS(parse_bifiltration("simplex 0 1 0 0\n"), syntax_error);
    CHECK(parse_bifiltration(serialize_bifiltration(st)).simplices.size() == st.simplices.size());
}

TEST_CASE("random bifiltrations") {
    std::mt19937_64 rng(13);
    Window w{{0, 0}, {3, 3}};
    for (int t = 0; t < 100; ++t) {
        Bifiltration bf = random_bifiltration(5, 7, 3, w, rng);
        CHECK_NOTHROW(bf.validate());
        for (int i = 0; i < 2; ++i) {
            GridModule H = homology_module(P, bf, i, w);
            CHECK(n2(H) <= bf.count(i));
            if (t < 20)
                for (auto p : w.points()) CHECK(H.dim(p) == betti_number(bf, i, p));
        }
    }
}

TEST_CASE("commands") {
    std::string sq = DATA + "/square.pres", simple = DATA + "/simple.mod";
    Run c = run({"count", sq});
    CHECK(c.rc == 0);
    CHECK(c.out == "{\"n2\":1,\"n_bth\":1,\"n_dth\":1}\n");
    Run cv = run({"curves", simple});
    CHECK(cv.out.find("\"births\":[[[0,0]]],\"deaths\":[[[1,1]]]") != std::string::npos);
    Run chk = run({"check", "--seed", "7", "--window", "0", "0", "2", "2"});
    CHECK(chk.rc == 0);
    CHECK(chk.out.find("\"equal\":true") != std::string::npos);
    CHECK(run({"check", "--seed", "7", "--window", "0", "0", "2", "2"}).out == chk.out);
    CHECK(run({"betti", sq}).rc == 0);
    CHECK(run({"boundary", sq}).out == run({"boundary", sq}).out);
    CHECK(run({"decompose", sq}).out.find("\"spread_decomposable\":true") != std::string::npos);
    Run g = run({"gen", "--seed", "3"});
    CHECK(g.rc == 0);
    CHECK(parse_presentation(g.out).gens.size() == 3);
    std::string svg = std::string(TEST_TMP_DIR) + "/square.svg";
    CHECK(run({"plot", sq, "--svg", svg}).rc == 0);
    CHECK(std::ifstream(svg).good());

    CHECK(run({}).rc == exit_code::usage);
    CHECK(run({"count"}).rc == exit_code::usage);
    CHECK(run({"frobnicate"}).rc == exit_code::usage);
    CHECK(run({"count", "/nonexistent/file"}).rc == exit_code::file);
    CHECK(run({"count", temp_file("bad.pres", "field p=65521\ngens\nx y\n")}).rc == exit_code::syntax);
    CHECK(run({"count", temp_file("inc.pres", "field p=65521\ngens\n1 1\nrels\n0 3 : 0:1\n")}).rc ==
          exit_code::invalid_input);
    CHECK(run({"count", temp_file("nm.bif", "simplex 0 @ 1 1\nsimplex 1 @ 0 0\nsimplex 0 1 @ 0 1\n")}).rc ==
          exit_code::invalid_input);
    CHECK(run({"count", sq, "--field", "10"}).rc == exit_code::field);
    CHECK(run({"count", sq, "--field", "101"}).rc == exit_code::field);
    CHECK(run({"boundary", sq, "--cap", "3"}).rc == exit_code::size);
    CHECK(run({"count", sq, "--cap", "0"}).rc == exit_code::usage);
}

}  // TEST_SUITE
