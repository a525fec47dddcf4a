#pragma once

// Modules found by search and frozen here.

#include <map>

#include "bgm/counts.hpp"
#include "bgm/gridmod.hpp"

namespace fixtures {

using namespace bgm;

inline Mat col(const Field& F, long long a, long long b) {
    Mat m(2, 1);
    m(0, 0) = F.from_int(a);
    m(1, 0) = F.from_int(b);
    return m;
}

// Values in subspaces of k^2, inclusions as structure maps; `layout` lists
// rows top to bottom with 0 for zero, 1..4 for lines e1, e2, e1+e2, e1+a*e2
// and 5 for the plane.
inline GridModule subspace_module(const Field& F, const std::vector<std::string>& layout, long long alpha) {
    std::vector<Mat> L{Mat(2, 0), col(F, 1, 0), col(F, 0, 1), col(F, 1, 1), col(F, 1, alpha), Mat::identity(2)};
    int h = int(layout.size()), wd = int(layout[0].size());
    Window w{{0, 0}, {wd - 1, h - 1}};
    std::map<Bigrade, int> V;
    for (int r = 0; r < h; ++r)
        for (int x = 0; x < wd; ++x)
            if (layout[r][x] != '0') V[{x, h - 1 - r}] = layout[r][x] - '0';
    GridModule M(F, w);
    for (auto [p, k] : V) M.set_dim(p, L[k].cols);
    for (auto p : w.points()) {
        M.set_xmap(p, Mat(M.dim(p + EX), M.dim(p)));
        M.set_ymap(p, Mat(M.dim(p + EY), M.dim(p)));
    }
    for (auto [p, k] : V) {
        if (V.count(p + EX)) M.set_xmap(p, *solve_membership(F, L[V[p + EX]], L[k]));
        if (V.count(p + EY)) M.set_ymap(p, *solve_membership(F, L[V[p + EY]], L[k]));
    }
    M.check();
    return M;
}

// two boundary components with monodromies 1-a and 1/(1-a)
inline GridModule two_lines(const Field& F, long long alpha) {
    return subspace_module(F, {"1550", "0255", "0045", "0003"}, alpha);
}

// k^2 at (1,1) fed by e1 from (0,1) and e2 from (1,0); y kills e2 and x
// kills e1+e2.  Same boundary as k_I + k_J for the squares below, but
// rank (0,1)->(2,1) is 1.
inline GridModule twisted_squares(const Field& F) {
    Window w{{0, 0}, {2, 2}};
    GridModule M(F, w);
    for (Bigrade p : {Bigrade{0, 1}, Bigrade{0, 2}, Bigrade{1, 2}, Bigrade{1, 0}, Bigrade{2, 0}, Bigrade{2, 1}})
        M.set_dim(p, 1);
    M.set_dim({1, 1}, 2);
    for (auto p : w.points()) {
        M.set_xmap(p, Mat(M.dim(p + EX), M.dim(p)));
        M.set_ymap(p, Mat(M.dim(p + EY), M.dim(p)));
    }
    auto row = [&](long long a, long long b) {
        Mat m(1, 2);
        m(0, 0) = F.from_int(a);
        m(0, 1) = F.from_int(b);
        return m;
    };
    Mat one(1, 1);
    one(0, 0) = 1;
    M.set_ymap({0, 1}, one);
    M.set_xmap({0, 1}, col(F, 1, 0));
    M.set_xmap({1, 0}, one);
    M.set_ymap({1, 0}, col(F, 0, 1));
    M.set_ymap({1, 1}, row(1, 0));
    M.set_xmap({0, 2}, one);
    M.set_xmap({1, 1}, row(1, -1));
    Mat m1(1, 1);
    m1(0, 0) = F.from_int(-1);
    M.set_ymap({2, 0}, m1);
    M.check();
    return M;
}
inline const std::set<Bigrade> square_left{{0, 1}, {0, 2}, {1, 1}, {1, 2}};
inline const std::set<Bigrade> square_right{{1, 0}, {2, 0}, {1, 1}, {2, 1}};

// spread-decomposable, equal rank invariants, different boundaries
inline const std::vector<std::set<Bigrade>> equal_rank_a{{{0, 0}}, {{0, 0}, {0, 1}, {1, 0}}};
inline const std::vector<std::set<Bigrade>> equal_rank_b{{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}};

// found among subsets of the degree 2 and 3 layers of {0,1,2}^3; the order
// complex has Euler characteristic -1
inline const std::set<Grade3> negative_spread{{0, 1, 1}, {0, 2, 0}, {0, 2, 1}, {1, 0, 1}, {1, 1, 0},
                                              {1, 1, 1}, {1, 2, 0}, {2, 0, 0}, {2, 0, 1}, {2, 1, 0}};

}  // namespace fixtures
