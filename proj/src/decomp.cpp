#include "bgm/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "bgm/poly.hpp"

namespace bgm {

int QuiverRep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> QuiverRep::support() const {
    std::vector<int> s;
    for (int v = 0; v < int(dims.size()); ++v)
        if (dims[v]) s.push_back(v);
    return s;
}

void QuiverRep::check() const {
    for (const Arrow& a : arrows) {
        if (a.s < 0 || a.t < 0 || a.s >= int(dims.size()) || a.t >= int(dims.size()))
            throw contract_error("arrow endpoint out of range");
        if (a.m.rows != dims[a.t] || a.m.cols != dims[a.s]) throw contract_error("arrow matrix shape mismatch");
    }
}

namespace {

// Linear system for families (φ_v : X_v -> Y_v) commuting with all arrows.
Mat hom_system(const QuiverRep& X, const QuiverRep& Y, std::vector<int>& off) {
    const Field& F = X.F;
    int n = int(X.dims.size());
    off.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + Y.dims[v] * X.dims[v];
    int rows = 0;
    for (std::size_t k = 0; k < X.arrows.size(); ++k) rows += Y.dims[X.arrows[k].t] * X.dims[X.arrows[k].s];
    Mat S(rows, off[n]);
    int row = 0;
    for (std::size_t k = 0; k < X.arrows.size(); ++k) {
        const Arrow& ax = X.arrows[k];
        const Arrow& ay = Y.arrows[k];
        int s = ax.s, t = ax.t;
        int ys = Y.dims[s], xs = X.dims[s], yt = Y.dims[t], xt = X.dims[t];
        for (int i = 0; i < yt; ++i)
            for (int j = 0; j < xs; ++j, ++row) {
                // (φ_t A^X)_{ij} - (A^Y φ_s)_{ij}
                for (int q = 0; q < xt; ++q) {
                    elem c = ax.m(q, j);
                    if (c) S(row, off[t] + i * xt + q) = F.add(S(row, off[t] + i * xt + q), c);
                }
                for (int q = 0; q < ys; ++q) {
                    elem c = ay.m(i, q);
                    if (c) S(row, off[s] + q * xs + j) = F.sub(S(row, off[s] + q * xs + j), c);
                }
            }
    }
    return S;
}

Endo unpack(const QuiverRep& X, const std::vector<int>& off, const Mat& K, int col) {
    Endo e(X.dims.size());
    for (int v = 0; v < int(X.dims.size()); ++v) {
        int d = X.dims[v];
        e[v] = Mat(d, d);
        for (int i = 0; i < d * d; ++i) e[v].a[i] = K(off[v] + i, col);
    }
    return e;
}

QuiverRep sub_rep(const QuiverRep& X, const std::vector<Mat>& B) {
    QuiverRep Y{X.F, {}, {}};
    for (auto& b : B) Y.dims.push_back(b.cols);
    for (const Arrow& a : X.arrows) {
        auto m = solve_membership(X.F, B[a.t], mul(X.F, a.m, B[a.s]));
        if (!m) throw decomposition_incomplete("subspace is not a subrepresentation");
        Y.arrows.push_back({a.s, a.t, *m, a.tag});
    }
    return Y;
}

Endo random_combination(const Field& F, const std::vector<Endo>& basis, std::mt19937_64& rng) {
    std::uniform_int_distribution<elem> d(0, F.p - 1);
    Endo e = basis[0];
    for (auto& m : e) m = Mat(m.rows, m.cols);
    for (const Endo& b : basis) {
        elem c = d(rng);
        if (!c) continue;
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = add(F, e[v], scale(F, c, b[v]));
    }
    return e;
}

// polynomial annihilating a random vector under the block-diagonal η
Poly krylov_polynomial(const Field& F, const QuiverRep& X, const Endo& eta, std::mt19937_64& rng) {
    int n = X.total_dim();
    std::uniform_int_distribution<elem> d(0, F.p - 1);
    std::vector<elem> v(n);
    for (auto& c : v) c = d(rng);
    auto apply = [&](const std::vector<elem>& u) {
        std::vector<elem> w(n, 0);
        int o = 0;
        for (std::size_t k = 0; k < X.dims.size(); ++k) {
            int dk = X.dims[k];
            for (int i = 0; i < dk; ++i) {
                std::uint64_t acc = 0;
                for (int j = 0; j < dk; ++j) acc = (acc + std::uint64_t(eta[k](i, j)) * u[o + j]) % F.p;
                w[o + i] = elem(acc);
            }
            o += dk;
        }
        return w;
    };
    struct Row {
        std::vector<elem> r, expr;
        int piv;
    };
    std::vector<Row> rows;
    std::vector<elem> cur = v;
    for (int m = 0; m <= n; ++m) {
        std::vector<elem> r = cur, expr(m + 1, 0);
        expr[m] = 1;
        for (const Row& b : rows) {
            elem c = r[b.piv];
            if (!c) continue;
            for (int i = 0; i < n; ++i) r[i] = F.sub(r[i], F.mul(c, b.r[i]));
            for (std::size_t i = 0; i < b.expr.size(); ++i) expr[i] = F.sub(expr[i], F.mul(c, b.expr[i]));
        }
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (r[i]) { piv = i; break; }
        if (piv < 0) return poly::monic(F, expr);
        elem iv = F.inv(r[piv]);
        for (auto& c : r) c = F.mul(c, iv);
        for (auto& c : expr) c = F.mul(c, iv);
        for (Row& b : rows) {
            elem c = b.r[piv];
            if (!c) continue;
            for (int i = 0; i < n; ++i) b.r[i] = F.sub(b.r[i], F.mul(c, r[i]));
            b.expr.resize(std::max(b.expr.size(), expr.size()), 0);
            for (std::size_t i = 0; i < expr.size(); ++i) b.expr[i] = F.sub(b.expr[i], F.mul(c, expr[i]));
        }
        rows.push_back({r, expr, piv});
        cur = apply(cur);
    }
    throw contract_error("Krylov sequence did not terminate");
}

Endo evaluate_endo(const Field& F, const Poly& g, const Endo& eta) {
    Endo r(eta.size());
    for (std::size_t v = 0; v < eta.size(); ++v) r[v] = poly::evaluate(F, g, eta[v]);
    return r;
}

// split along a coprime factorization of an annihilating polynomial of η
std::optional<std::pair<Summand, Summand>> primary_split(const QuiverRep& X, const Endo& eta,
                                                         std::mt19937_64& rng) {
    if (auto s = fitting_split(X, eta)) return s;
    const Field& F = X.F;
    Poly k = krylov_polynomial(F, X, eta, rng);
    if (poly::deg(k) < 2) return std::nullopt;
    Poly sq = poly::squarefree_part(F, k);
    Poly g = poly::split_squarefree(F, sq, rng);
    if (g.empty()) return std::nullopt;
    return fitting_split(X, evaluate_endo(F, g, eta));
}

int gram_rank(const Field& F, const std::vector<Endo>& basis) {
    int m = int(basis.size());
    Mat G(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            elem t = 0;
            for (std::size_t v = 0; v < basis[i].size(); ++v) {
                const Mat& A = basis[i][v];
                const Mat& B = basis[j][v];
                int d = A.rows;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b) t = F.add(t, F.mul(A(a, b), B(b, a)));
            }
            G(i, j) = G(j, i) = t;
        }
    return rank(F, G);
}

bool field_certificate(const QuiverRep& X, const std::vector<Endo>& basis, int r, std::mt19937_64& rng) {
    // E/rad(E) of dimension r is a field iff some element has minimal polynomial f^e, f irreducible of degree r
    const Field& F = X.F;
    for (int attempt = 0; attempt < 16; ++attempt) {
        Endo eta = random_combination(F, basis, rng);
        Poly mu{1};
        for (std::size_t v = 0; v < eta.size(); ++v) {
            if (!eta[v].rows) continue;
            Poly m = poly::minimal_polynomial(F, eta[v]);
            mu = poly::div(F, poly::mul(F, mu, m), poly::gcd(F, mu, m));
        }
        Poly f = poly::squarefree_part(F, mu);
        if (poly::deg(f) == r && poly::is_irreducible(F, f)) return true;
    }
    return false;
}

void check_field(const QuiverRep& X) {
    int n = X.total_dim();
    if (elem(n) >= X.F.p)
        throw field_too_small("decomposition needs a prime larger than the total dimension " + std::to_string(n) +
                              " (have p=" + std::to_string(X.F.p) + "); rerun with --field 65521");
}

Summand compose(const Summand& outer, Summand inner) {
    for (std::size_t v = 0; v < inner.embed.size(); ++v) inner.embed[v] = mul(outer.rep.F, outer.embed[v], inner.embed[v]);
    return inner;
}

void split_rec(const Summand& S, const DecompOptions& opt, std::mt19937_64& rng, std::vector<Summand>& out) {
    const QuiverRep& X = S.rep;
    if (X.total_dim() == 0) return;
    std::vector<Endo> basis = endomorphism_basis(X, opt.cap);
    if (basis.size() == 1) {
        out.push_back(S);
        return;
    }
    int r = gram_rank(X.F, basis);
    if (r == 1) {
        out.push_back(S);
        return;
    }
    auto recurse = [&](std::pair<Summand, Summand>& parts) {
        split_rec(compose(S, parts.first), opt, rng, out);
        split_rec(compose(S, parts.second), opt, rng, out);
    };
    for (const Endo& b : basis)
        if (auto parts = primary_split(X, b, rng)) {
            recurse(*parts);
            return;
        }
    for (int t = 0; t < opt.budget; ++t) {
        Endo eta = random_combination(X.F, basis, rng);
        if (auto parts = primary_split(X, eta, rng)) {
            recurse(*parts);
            return;
        }
    }
    if (field_certificate(X, basis, r, rng)) {
        out.push_back(S);
        return;
    }
    throw decomposition_incomplete("no splitting endomorphism found and the endomorphism ring is not local");
}

std::vector<std::vector<int>> components(const QuiverRep& X) {
    int n = int(X.dims.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Arrow& a : X.arrows)
        if (!a.m.is_zero()) parent[find(a.s)] = find(a.t);
    std::vector<std::vector<int>> comps;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!X.dims[v]) continue;
        int r = find(v);
        if (slot[r] < 0) {
            slot[r] = int(comps.size());
            comps.emplace_back();
        }
        comps[slot[r]].push_back(v);
    }
    return comps;
}

}  // namespace

std::vector<Endo> endomorphism_basis(const QuiverRep& X, int cap) {
    if (X.total_dim() > cap) throw cap_exceeded("total dimension " + std::to_string(X.total_dim()) + " exceeds cap");
    std::vector<int> off;
    Mat S = hom_system(X, X, off);
    Mat K = kernel_basis(X.F, S);
    std::vector<Endo> out;
    for (int c = 0; c < K.cols; ++c) out.push_back(unpack(X, off, K, c));
    return out;
}

int hom_dim(const QuiverRep& X, const QuiverRep& Y) {
    if (X.dims.size() != Y.dims.size() || X.arrows.size() != Y.arrows.size())
        throw contract_error("hom_dim: quivers differ");
    std::vector<int> off;
    Mat S = hom_system(X, Y, off);
    return S.cols - rank(X.F, S);
}

bool is_endomorphism(const QuiverRep& X, const Endo& eta) {
    for (const Arrow& a : X.arrows)
        if (!(mul(X.F, eta[a.t], a.m) == mul(X.F, a.m, eta[a.s]))) return false;
    return true;
}

std::optional<std::pair<Summand, Summand>> fitting_split(const QuiverRep& X, const Endo& eta) {
    const Field& F = X.F;
    std::vector<Mat> K(X.dims.size()), I(X.dims.size());
    int kd = 0;
    for (std::size_t v = 0; v < X.dims.size(); ++v) {
        int d = X.dims[v];
        Mat P = mat_pow(F, eta[v], std::uint64_t(std::max(d, 1)));
        K[v] = kernel_basis(F, P);
        I[v] = column_basis(F, P);
        kd += K[v].cols;
    }
    if (kd == 0 || kd == X.total_dim()) return std::nullopt;
    Summand a{sub_rep(X, K), K}, b{sub_rep(X, I), I};
    return std::make_pair(a, b);
}

bool is_local(const QuiverRep& X, std::uint64_t seed) {
    check_field(X);
    std::vector<Endo> basis = endomorphism_basis(X, std::max(1024, X.total_dim()));
    if (basis.size() == 1) return true;
    int r = gram_rank(X.F, basis);
    if (r == 1) return true;
    std::mt19937_64 rng(seed);
    return field_certificate(X, basis, r, rng);
}

Decomposition decompose(const QuiverRep& X, const DecompOptions& opt) {
    X.check();
    if (X.total_dim() > opt.cap) throw cap_exceeded("total dimension " + std::to_string(X.total_dim()) + " exceeds cap");
    check_field(X);
    std::mt19937_64 rng(opt.seed);
    std::vector<Summand> out;
    for (const auto& comp : components(X)) {
        std::vector<Mat> B(X.dims.size());
        std::vector<char> in(X.dims.size(), 0);
        for (int v : comp) in[v] = 1;
        for (std::size_t v = 0; v < X.dims.size(); ++v)
            B[v] = in[v] ? Mat::identity(X.dims[v]) : Mat(X.dims[v], 0);
        split_rec(Summand{sub_rep(X, B), B}, opt, rng, out);
    }
    auto key = [](const Summand& s) { return std::make_tuple(s.rep.total_dim(), s.rep.support(), s.rep.dims); };
    std::stable_sort(out.begin(), out.end(), [&](const Summand& a, const Summand& b) { return key(a) < key(b); });
    return Decomposition{out};
}

bool verify_decomposition(const QuiverRep& X, const Decomposition& d) {
    const Field& F = X.F;
    for (std::size_t v = 0; v < X.dims.size(); ++v) {
        Mat all(X.dims[v], 0);
        for (const Summand& s : d.summands) all = hcat(all, s.embed[v]);
        if (all.cols != X.dims[v] || rank(F, all) != X.dims[v]) return false;
    }
    for (const Summand& s : d.summands)
        for (std::size_t k = 0; k < X.arrows.size(); ++k) {
            const Arrow& a = X.arrows[k];
            if (!(mul(F, a.m, s.embed[a.s]) == mul(F, s.embed[a.t], s.rep.arrows[k].m))) return false;
        }
    return true;
}

QuiverRep to_quiver(const GridModule& M) {
    QuiverRep X{M.F, M.dims, {}};
    for (auto p : M.w.points()) {
        int i = M.w.index(p);
        if (!M.dim(p)) continue;
        if (M.w.contains(p + EX) && M.dim(p + EX)) X.arrows.push_back({i, M.w.index(p + EX), M.xmap(p), 2 * i});
        if (M.w.contains(p + EY) && M.dim(p + EY)) X.arrows.push_back({i, M.w.index(p + EY), M.ymap(p), 2 * i + 1});
    }
    return X;
}

GridModule to_grid(const QuiverRep& X, Window w) {
    GridModule M(X.F, w);
    M.dims = X.dims;
    for (auto p : w.points()) {
        M.set_xmap(p, Mat(M.dim(p + EX) * w.contains(p + EX), M.dim(p)));
        M.set_ymap(p, Mat(M.dim(p + EY) * w.contains(p + EY), M.dim(p)));
    }
    for (const Arrow& a : X.arrows) {
        Bigrade p = w.point(a.tag / 2);
        if (a.tag % 2 == 0) M.set_xmap(p, a.m);
        else M.set_ymap(p, a.m);
    }
    return M;
}

GridSummands decompose_grid(const GridModule& M, const DecompOptions& opt) {
    GridSummands out;
    for (const Summand& s : decompose(to_quiver(M), opt).summands) out.modules.push_back(to_grid(s.rep, M.w));
    return out;
}

SpreadCheck is_spread_decomposable(const GridModule& M, const DecompOptions& opt) {
    SpreadCheck c;
    c.ok = true;
    for (const GridModule& S : decompose_grid(M, opt).modules) {
        for (int d : S.dims)
            if (d > 1) c.ok = false;
        c.supports.push_back(S.support());
    }
    if (!c.ok) c.supports.clear();
    return c;
}

}  // namespace bgm
