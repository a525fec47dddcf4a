#pragma once

#include <algorithm>
#include <random>

#include "bgm/gridmod.hpp"
#include "bgm/linalg.hpp"
#include "bgm/oneparam.hpp"

namespace testing_support {

inline bgm::Mat random_mat(const bgm::Field& F, int r, int c, std::mt19937_64& rng) {
    bgm::Mat m(r, c);
    std::uniform_int_distribution<bgm::elem> d(0, F.p - 1);
    for (auto& v : m.a) v = d(rng);
    return m;
}

inline bgm::Mat from_rows(std::initializer_list<std::initializer_list<bgm::elem>> rows) {
    int r = int(rows.size()), c = r ? int(rows.begin()->size()) : 0;
    bgm::Mat m(r, c);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (auto v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

inline std::set<bgm::Bigrade> pts(std::initializer_list<bgm::Bigrade> l) { return {l}; }

inline bgm::GridModule random_module(const bgm::Field& F, std::uint64_t seed, bgm::Window w, int maxgens = 3) {
    std::mt19937_64 rng(seed);
    int g = 1 + int(rng() % maxgens), r = int(rng() % (maxgens + 1));
    return bgm::evaluate_presentation(bgm::random_presentation(F, g, r, w, seed), w);
}

// conjugate by random invertible matrices at every point
inline bgm::GridModule base_change(const bgm::GridModule& M, std::mt19937_64& rng) {
    using namespace bgm;
    const Window& w = M.w;
    GridModule N = M;
    std::vector<Mat> g(w.size()), gi(w.size());
    for (auto p : w.points()) {
        int d = M.dim(p);
        while (true) {
            g[w.index(p)] = random_mat(M.F, d, d, rng);
            auto inv = inverse(M.F, g[w.index(p)]);
            if (inv) {
                gi[w.index(p)] = *inv;
                break;
            }
        }
    }
    for (auto p : w.points()) {
        if (w.contains(p + EX)) N.set_xmap(p, mul(M.F, g[w.index(p + EX)], mul(M.F, M.xmap(p), gi[w.index(p)])));
        if (w.contains(p + EY)) N.set_ymap(p, mul(M.F, g[w.index(p + EY)], mul(M.F, M.ymap(p), gi[w.index(p)])));
    }
    return N;
}

// component of (random up-set) ∩ (random down-set) through a random point
inline std::set<bgm::Bigrade> random_spread(bgm::Window w, std::mt19937_64& rng) {
    using namespace bgm;
    std::uniform_int_distribution<int> X(w.lo.x, w.hi.x), Y(w.lo.y, w.hi.y);
    while (true) {
        std::vector<Bigrade> lo(1 + rng() % 3), hi(1 + rng() % 3);
        for (auto& q : lo) q = {X(rng), Y(rng)};
        for (auto& q : hi) q = {X(rng), Y(rng)};
        std::set<Bigrade> S;
        for (auto p : w.points()) {
            bool up = std::any_of(lo.begin(), lo.end(), [&](Bigrade q) { return leq(q, p); });
            bool down = std::any_of(hi.begin(), hi.end(), [&](Bigrade q) { return leq(p, q); });
            if (up && down) S.insert(p);
        }
        if (S.empty()) continue;
        auto it = S.begin();
        std::advance(it, std::uniform_int_distribution<int>(0, int(S.size()) - 1)(rng));
        std::set<Bigrade> I{*it}, frontier{*it};
        while (!frontier.empty()) {
            std::set<Bigrade> next;
            for (auto p : frontier)
                for (auto d : {EX, EY, -EX, -EY})
                    if (S.count(p + d) && !I.count(p + d)) {
                        I.insert(p + d);
                        next.insert(p + d);
                    }
            frontier = next;
        }
        return I;
    }
}

inline bgm::SlicePath random_slice(bgm::Window w, std::mt19937_64& rng) {
    using namespace bgm;
    std::uniform_int_distribution<int> X(w.lo.x, w.hi.x), Y(w.lo.y, w.hi.y), step(0, 2);
    SlicePath l;
    Bigrade p{X(rng), Y(rng)};
    while (w.contains(p)) {
        l.points.push_back(p);
        Bigrade d{step(rng), step(rng)};
        if (d == Bigrade{0, 0}) d = EX;
        p = p + d;
    }
    return l;
}

}  // namespace testing_support
