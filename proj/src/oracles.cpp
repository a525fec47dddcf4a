#include "bgm/oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <mutex>
#include <optional>
#include <tuple>

namespace bgm {

namespace {

// no point of the bounding box outside I lies between two members
bool order_convex(const PointSet& I) {
    Grade3 lo = *I.begin(), hi = *I.begin();
    for (auto p : I)
        for (int a = 0; a < 3; ++a) lo[a] = std::min(lo[a], p[a]), hi[a] = std::max(hi[a], p[a]);
    Window3 box{lo, hi};
    for (auto q : box.points()) {
        if (I.count(q)) continue;
        bool below = false, above = false;
        for (auto p : I) {
            if (leq3(p, q)) below = true;
            if (leq3(q, p)) above = true;
        }
        if (below && above) return false;
    }
    return true;
}

bool connected(const PointSet& I) {
    std::set<Grade3> seen{*I.begin()};
    std::vector<Grade3> stack{*I.begin()};
    while (!stack.empty()) {
        Grade3 p = stack.back();
        stack.pop_back();
        for (int a = 0; a < 3; ++a)
            for (int s : {-1, 1}) {
                Grade3 n = p;
                n[a] += s;
                if (I.count(n) && seen.insert(n).second) stack.push_back(n);
            }
    }
    return seen.size() == I.size();
}

void sort_unique(std::vector<PointSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

QuiverRep full_quiver(const CubeModule3& M) {
    QuiverRep X{M.F, M.dims, {}};
    for (auto p : M.w.points())
        for (int a = 0; a < 3; ++a) {
            Grade3 q = add3(p, unit3(a));
            if (M.w.contains(q)) X.arrows.push_back({M.w.index(p), M.w.index(q), M.step(p, a), 3 * M.w.index(p) + a});
        }
    return X;
}

using boost::multiprecision::cpp_rational;

std::vector<long long> rational_solve(const std::vector<std::vector<long long>>& A, const std::vector<long long>& v) {
    int n = int(A.size());
    std::vector<std::vector<cpp_rational>> m(n, std::vector<cpp_rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A[i][j];
        m[i][n] = v[i];
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw inversion_failure("basis matrix is singular");
        std::swap(m[piv], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            cpp_rational f = m[r][c] / m[c][c];
            for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) {
        cpp_rational x = m[i][n] / m[i][i];
        if (denominator(x) != 1) throw inversion_failure("values are not an integer combination of the basis");
        out[i] = static_cast<long long>(numerator(x));
    }
    return out;
}

// Exact solver for a fixed integer basis matrix: invert modulo a large prime,
// lift to the symmetric range, and confirm by exact integer multiplication.
struct ExactSolver {
    std::vector<std::vector<long long>> A;
    Field F{2147483647};
    std::optional<Mat> inv;

    explicit ExactSolver(std::vector<std::vector<long long>> a) : A(std::move(a)) {
        int n = int(A.size());
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = F.from_int(A[i][j]);
        inv = inverse(F, m);
    }

    std::vector<long long> solve(const std::vector<long long>& v) const {
        int n = int(A.size());
        if (int(v.size()) != n) throw contract_error("signed_solve: size mismatch");
        if (inv) {
            Mat b(n, 1);
            for (int i = 0; i < n; ++i) b(i, 0) = F.from_int(v[i]);
            Mat x = mul(F, *inv, b);
            std::vector<long long> c(n);
            for (int i = 0; i < n; ++i) c[i] = F.to_signed(x(i, 0));
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                long long s = 0;
                for (int j = 0; j < n; ++j) s += A[i][j] * c[j];
                ok = s == v[i];
            }
            if (ok) return c;
        }
        return rational_solve(A, v);
    }
};

PointSet upset_in(const Window3& w, Grade3 a) {
    PointSet s;
    for (auto z : w.points())
        if (leq3(a, z)) s.insert(z);
    return s;
}

enum class Kind { gpd, barcode, hooks, euler, hilbert };

struct FamilyCache {
    SpreadFamily fam;
    std::map<Kind, ExactSolver> solvers;
};

std::mutex cache_mutex;
std::map<std::tuple<Grade3, Grade3, elem>, FamilyCache> cache;

const std::vector<PointSet>& family_of(const SpreadFamily& f, Kind k) {
    switch (k) {
        case Kind::gpd:
        case Kind::euler: return f.spreads;
        case Kind::barcode: return f.segments;
        case Kind::hooks: return f.hooks;
        case Kind::hilbert: return f.upsets;
    }
    throw contract_error("unknown family");
}

// hom-type families need a solver built from the hom dimensions between basis modules
const ExactSolver& solver_for(const Field& F, const Window3& w, Kind k, const SpreadFamily*& fam) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(w.lo, w.hi, F.p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, FamilyCache{enumerate_spreads(w), {}}).first;
    FamilyCache& fc = it->second;
    fam = &fc.fam;
    auto s = fc.solvers.find(k);
    if (s == fc.solvers.end()) {
        const auto& list = family_of(fc.fam, k);
        std::vector<CubeModule3> mods;
        for (const auto& I : list) mods.push_back(spread_module3(F, I, w));
        int n = int(list.size());
        std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A[i][j] = hom_dim(mods[i], mods[j]);
        s = fc.solvers.emplace(k, ExactSolver(std::move(A))).first;
    }
    return s->second;
}

const SpreadFamily& family_for(const Field& F, const Window3& w) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(w.lo, w.hi, F.p);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, FamilyCache{enumerate_spreads(w), {}}).first;
    return it->second.fam;
}

long long total(const SignedMultiset& c) {
    long long t = 0;
    for (const auto& [I, v] : c) t += v;
    return t;
}

long long hom_count(const CubeModule3& M, Kind k) {
    const SpreadFamily* fam = nullptr;
    const ExactSolver& S = solver_for(M.F, M.w, k, fam);
    const auto& list = family_of(*fam, k);
    std::vector<long long> v;
    for (const auto& I : list) v.push_back(hom_dim(spread_module3(M.F, I, M.w), M));
    long long t = 0;
    for (long long c : S.solve(v)) t += c;
    return t;
}

}  // namespace

SpreadFamily enumerate_spreads(const Window3& w) {
    int n = w.size();
    if (n > 16) throw size_limit("spread enumeration is limited to 16 grid points");
    SpreadFamily f;
    f.grid = w;
    auto pts = w.points();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        PointSet I;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) I.insert(pts[i]);
        if (connected(I) && order_convex(I)) f.spreads.push_back(I);
    }
    for (auto a : pts) {
        f.upsets.push_back(upset_in(w, a));
        f.hooks.push_back(upset_in(w, a));
        for (auto b : pts) {
            if (!leq3(a, b)) continue;
            PointSet seg, hook;
            for (auto z : pts) {
                if (leq3(a, z) && leq3(z, b)) seg.insert(z);
                if (a != b && leq3(a, z) && !leq3(b, z)) hook.insert(z);
            }
            f.segments.push_back(seg);
            if (!hook.empty()) f.hooks.push_back(hook);
        }
    }
    sort_unique(f.spreads);
    sort_unique(f.segments);
    sort_unique(f.hooks);
    sort_unique(f.upsets);
    return f;
}

SpreadFamily enumerate_spreads(const Window& w) { return enumerate_spreads(lift3(w)); }

PointSet lift_set(const std::set<Bigrade>& I) {
    PointSet s;
    for (auto p : I) s.insert(lift3(p));
    return s;
}

int generalized_rank(const CubeModule3& M, const PointSet& I) {
    if (I.empty()) return 0;
    for (auto p : I)
        if (!M.w.contains(p)) throw contract_error("generalized_rank: set leaves the window");
    const Field& F = M.F;
    std::map<Grade3, int> off;
    int n = 0;
    for (auto p : I) {
        off[p] = n;
        n += M.dim(p);
    }
    if (n == 0) return 0;
    std::vector<std::pair<Grade3, int>> steps;
    int crow = 0, rcol = 0;
    for (auto p : I)
        for (int a = 0; a < 3; ++a) {
            Grade3 q = add3(p, unit3(a));
            if (!I.count(q)) continue;
            steps.push_back({p, a});
            crow += M.dim(q);
            rcol += M.dim(p);
        }
    // lim: φ m_p = m_q along every step; colim: quotient by ι_q φ - ι_p
    Mat C(crow, n), R(n, rcol);
    int r = 0, c = 0;
    for (auto [p, a] : steps) {
        Grade3 q = add3(p, unit3(a));
        Mat phi = M.step(p, a);
        for (int i = 0; i < M.dim(q); ++i) {
            for (int j = 0; j < M.dim(p); ++j) C(r + i, off[p] + j) = phi(i, j);
            C(r + i, off[q] + i) = F.sub(C(r + i, off[q] + i), 1);
        }
        for (int j = 0; j < M.dim(p); ++j) {
            for (int i = 0; i < M.dim(q); ++i) R(off[q] + i, c + j) = phi(i, j);
            R(off[p] + j, c + j) = F.sub(R(off[p] + j, c + j), 1);
        }
        r += M.dim(q);
        c += M.dim(p);
    }
    Mat L = kernel_basis(F, C);
    Grade3 p0 = *I.begin();
    Mat Z(n, L.cols);
    for (int j = 0; j < L.cols; ++j)
        for (int i = 0; i < M.dim(p0); ++i) Z(off[p0] + i, j) = L(off[p0] + i, j);
    return rank(F, hcat(R, Z)) - rank(F, R);
}

int generalized_rank(const GridModule& M, const std::set<Bigrade>& I) { return generalized_rank(to_cube(M), lift_set(I)); }

int hom_dim(const CubeModule3& N, const CubeModule3& M) {
    if (!(N.w == M.w) || !(N.F == M.F)) throw contract_error("hom_dim: modules on different windows or fields");
    return hom_dim(full_quiver(N), full_quiver(M));
}

int hom_dim(const GridModule& N, const GridModule& M) {
    Window w = hull(N.w, M.w);
    return hom_dim(to_cube(extend(N, w)), to_cube(extend(M, w)));
}

SignedMultiset mobius_invert(const std::map<PointSet, long long>& values, const std::vector<PointSet>& family) {
    for (const auto& [I, v] : values)
        if (v && std::find(family.begin(), family.end(), I) == family.end())
            throw inversion_failure("value outside the family");
    std::vector<PointSet> order = family;
    std::stable_sort(order.begin(), order.end(), [](const PointSet& a, const PointSet& b) { return a.size() > b.size(); });
    SignedMultiset c;
    for (const auto& I : order) {
        auto it = values.find(I);
        long long v = it == values.end() ? 0 : it->second;
        for (const auto& [J, cj] : c)
            if (J.size() > I.size() && std::includes(J.begin(), J.end(), I.begin(), I.end())) v -= cj;
        if (v) c[I] = v;
    }
    return c;
}

std::vector<long long> signed_solve(const std::vector<std::vector<long long>>& basis, const std::vector<long long>& values) {
    return ExactSolver(basis).solve(values);
}

long long count_gpd(const CubeModule3& M) {
    const SpreadFamily& f = family_for(M.F, M.w);
    std::map<PointSet, long long> v;
    for (const auto& I : f.spreads) v[I] = generalized_rank(M, I);
    return total(mobius_invert(v, f.spreads));
}

long long count_signed_barcode(const CubeModule3& M) {
    const SpreadFamily& f = family_for(M.F, M.w);
    std::map<PointSet, long long> v;
    for (const auto& I : f.segments) v[I] = rank(M.F, M.map(*I.begin(), *I.rbegin()));
    return total(mobius_invert(v, f.segments));
}

long long count_hooks(const CubeModule3& M) { return hom_count(M, Kind::hooks); }
long long count_int_euler(const CubeModule3& M) { return hom_count(M, Kind::euler); }

long long count_hilbert(const CubeModule3& M) {
    const SpreadFamily& f = family_for(M.F, M.w);
    std::map<PointSet, long long> v;
    for (const auto& U : f.upsets) v[U] = M.dim(*U.begin());
    return total(mobius_invert(v, f.upsets));
}

long long count_gpd(const GridModule& M) { return count_gpd(to_cube(M)); }
long long count_signed_barcode(const GridModule& M) { return count_signed_barcode(to_cube(M)); }
long long count_hooks(const GridModule& M) { return count_hooks(to_cube(M)); }
long long count_int_euler(const GridModule& M) { return count_int_euler(to_cube(M)); }
long long count_hilbert(const GridModule& M) { return count_hilbert(to_cube(M)); }

long long order_complex_euler(const PointSet& I, int cap) {
    if (int(I.size()) > cap) throw size_limit("order complex enumeration is limited to " + std::to_string(cap) + " points");
    std::vector<Grade3> v(I.begin(), I.end());
    std::sort(v.begin(), v.end(), [](Grade3 a, Grade3 b) { return a[0] + a[1] + a[2] < b[0] + b[1] + b[2]; });
    // chains[k][i]: chains of k+1 elements with top v[i]
    int n = int(v.size());
    std::vector<std::vector<long long>> chains(n, std::vector<long long>(n, 0));
    long long chi = 0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (k == 0) chains[0][i] = 1;
            else
                for (int j = 0; j < i; ++j)
                    if (leq3(v[j], v[i]) && v[j] != v[i]) chains[k][i] += chains[k - 1][j];
            chi += (k % 2 ? -1 : 1) * chains[k][i];
        }
    return chi;
}

long long order_complex_euler(const std::set<Bigrade>& I, int cap) { return order_complex_euler(lift_set(I), cap); }

}  // namespace bgm
