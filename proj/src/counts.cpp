#include "bgm/counts.hpp"

#include <queue>

namespace bgm {

std::vector<Grade3> Window3::points() const {
    std::vector<Grade3> out;
    for (int i = 0; i < size(); ++i) out.push_back(point(i));
    return out;
}

CubeModule3::CubeModule3(Field f, Window3 win) : F(f), w(win), dims(win.size(), 0) {
    for (auto& m : maps) m.assign(win.size(), Mat(0, 0));
}

Mat CubeModule3::step(Grade3 p, int axis) const {
    Grade3 q = add3(p, unit3(axis));
    if (!w.contains(p)) return Mat(dim(q), 0);
    return maps[axis][w.index(p)];
}

void CubeModule3::set_step(Grade3 p, int axis, Mat m) { maps[axis][w.index(p)] = std::move(m); }

Mat CubeModule3::map(Grade3 a, Grade3 b) const {
    if (!leq3(a, b)) throw contract_error("map: a is not below b");
    Mat m = Mat::identity(dim(a));
    Grade3 c = a;
    for (int ax = 0; ax < 3; ++ax)
        while (c[ax] < b[ax]) {
            if (m.rows == 0) return Mat(dim(b), dim(a));
            m = mul(F, step(c, ax), m);
            c[ax] += 1;
        }
    return m;
}

int CubeModule3::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

void CubeModule3::check() const {
    if (int(dims.size()) != w.size()) throw contract_error("cube module: dims size");
    for (auto p : w.points())
        for (int a = 0; a < 3; ++a) {
            Grade3 q = add3(p, unit3(a));
            const Mat& m = maps[a][w.index(p)];
            if (m.cols != dim(p) || m.rows != (w.contains(q) ? dim(q) : 0))
                throw contract_error("cube module: map shape");
        }
    for (auto p : w.points())
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Grade3 pa = add3(p, unit3(a)), pb = add3(p, unit3(b)), q = add3(pa, unit3(b));
                if (!w.contains(q)) continue;
                if (!(mul(F, step(pa, b), step(p, a)) == mul(F, step(pb, a), step(p, b))))
                    throw contract_error("cube module: maps do not commute");
            }
}

CubeModule3 to_cube(const GridModule& M) {
    CubeModule3 C(M.F, lift3(M.w));
    for (auto p : M.w.points()) {
        Grade3 q = lift3(p);
        int i = C.w.index(q);
        C.dims[i] = M.dim(p);
        C.maps[0][i] = M.xmap(p);
        C.maps[1][i] = M.ymap(p);
        C.maps[2][i] = Mat(0, M.dim(p));
    }
    return C;
}

bool is_spread3(const std::set<Grade3>& I) {
    if (I.empty()) return false;
    std::set<Grade3> seen{*I.begin()};
    std::queue<Grade3> q;
    q.push(*I.begin());
    while (!q.empty()) {
        Grade3 p = q.front();
        q.pop();
        for (int a = 0; a < 3; ++a)
            for (int s : {-1, 1}) {
                Grade3 n = p;
                n[a] += s;
                if (I.count(n) && seen.insert(n).second) q.push(n);
            }
    }
    if (seen.size() != I.size()) return false;
    // convexity: every point of the box between two members is a member
    for (auto a : I)
        for (auto b : I) {
            if (!leq3(a, b)) continue;
            for (int x = a[0]; x <= b[0]; ++x)
                for (int y = a[1]; y <= b[1]; ++y)
                    for (int z = a[2]; z <= b[2]; ++z)
                        if (!I.count({x, y, z})) return false;
        }
    return true;
}

CubeModule3 spread_module3(const Field& F, const std::set<Grade3>& I, Window3 w) {
    if (!is_spread3(I)) throw invalid_spread("not a spread");
    for (auto p : I)
        if (!w.contains(p)) throw invalid_spread("spread leaves the window");
    CubeModule3 M(F, w);
    for (auto p : w.points()) M.dims[w.index(p)] = I.count(p) ? 1 : 0;
    for (auto p : w.points())
        for (int a = 0; a < 3; ++a) {
            Grade3 q = add3(p, unit3(a));
            Mat m(w.contains(q) ? M.dim(q) : 0, M.dim(p));
            if (m.rows && m.cols) m(0, 0) = 1;
            M.set_step(p, a, m);
        }
    return M;
}

int n2(const GridModule& M) {
    long long t = 0;
    for (auto p : M.w.points()) {
        t += M.dim(p);
        t -= rank(M.F, M.map(p, p + EX));
        t -= rank(M.F, M.map(p, p + EY));
        t += rank(M.F, M.map(p, p + EXY));
    }
    return int(t);
}

int n_incl_excl(const GridModule& M) { return n_incl_excl(to_cube(M)); }

int n_incl_excl(const CubeModule3& M) {
    long long t = 0;
    for (auto p : M.w.points())
        for (int S = 0; S < 8; ++S) {
            Grade3 q = p;
            int sign = 1;
            for (int a = 0; a < 3; ++a)
                if (S >> a & 1) {
                    q[a] += 1;
                    sign = -sign;
                }
            t += sign * rank(M.F, M.map(p, q));
        }
    return int(t);
}

int n_bth(const GridModule& M, const DecompOptions& opt) { return int(births(M, opt).size()); }
int n_dth(const GridModule& M, const DecompOptions& opt) { return int(deaths(M, opt).size()); }

int n_dec(const GridModule& M, const DecompOptions& opt) {
    if (M.is_zero()) return 0;
    return int(decompose_grid(M, opt).modules.size());
}

}  // namespace bgm
