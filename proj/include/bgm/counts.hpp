#pragma once

#include <array>
#include <set>
#include <vector>

#include "bgm/decomp.hpp"
#include "bgm/endcurves.hpp"
#include "bgm/gridmod.hpp"

namespace bgm {

using Grade3 = std::array<int, 3>;

inline Grade3 unit3(int axis) {
    Grade3 e{0, 0, 0};
    e[axis] = 1;
    return e;
}
inline Grade3 add3(Grade3 a, Grade3 b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline bool leq3(Grade3 a, Grade3 b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }
inline Grade3 lift3(Bigrade p) { return {p.x, p.y, 0}; }

struct Window3 {
    Grade3 lo{0, 0, 0}, hi{-1, -1, -1};

    bool empty() const { return hi[0] < lo[0] || hi[1] < lo[1] || hi[2] < lo[2]; }
    int extent(int a) const { return empty() ? 0 : hi[a] - lo[a] + 1; }
    int size() const { return extent(0) * extent(1) * extent(2); }
    bool contains(Grade3 p) const { return !empty() && leq3(lo, p) && leq3(p, hi); }
    int index(Grade3 p) const {
        return ((p[2] - lo[2]) * extent(1) + (p[1] - lo[1])) * extent(0) + (p[0] - lo[0]);
    }
    Grade3 point(int i) const {
        return {lo[0] + i % extent(0), lo[1] + (i / extent(0)) % extent(1), lo[2] + i / (extent(0) * extent(1))};
    }
    std::vector<Grade3> points() const;
    bool operator==(const Window3&) const = default;
};

inline Window3 lift3(const Window& w) { return {lift3(w.lo), lift3(w.hi)}; }

// Dense representation of a box in Z^3; maps[a][i] goes from point i to i + e_a
// and has zero rows when that leaves the box.
struct CubeModule3 {
    Field F;
    Window3 w;
    std::vector<int> dims;
    std::array<std::vector<Mat>, 3> maps;

    CubeModule3() = default;
    CubeModule3(Field f, Window3 win);

    int dim(Grade3 p) const { return w.contains(p) ? dims[w.index(p)] : 0; }
    Mat step(Grade3 p, int axis) const;
    void set_step(Grade3 p, int axis, Mat m);
    Mat map(Grade3 a, Grade3 b) const;
    int total_dim() const;
    void check() const;
};

CubeModule3 to_cube(const GridModule& M);
bool is_spread3(const std::set<Grade3>& I);
CubeModule3 spread_module3(const Field& F, const std::set<Grade3>& I, Window3 w);

int n2(const GridModule& M);
int n_incl_excl(const GridModule& M);
int n_incl_excl(const CubeModule3& M);
int n_bth(const GridModule& M, const DecompOptions& opt = {});
int n_dth(const GridModule& M, const DecompOptions& opt = {});
int n_dec(const GridModule& M, const DecompOptions& opt = {});

}  // namespace bgm
