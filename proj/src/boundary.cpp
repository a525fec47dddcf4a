#include "bgm/boundary.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bgm {

namespace {

struct GradeData {
    Mat kxy, kx, ky;       // kernel bases in M_p coordinates
    Quotient qb, qx, qy;   // M_p modulo xyM, xM, yM
};

GradeData grade_data(const GridModule& M, Bigrade p) {
    const Field& F = M.F;
    int n = M.dim(p);
    GradeData g;
    g.kxy = kernel_basis(F, M.map(p, p + EXY));
    g.kx = kernel_basis(F, M.map(p, p + EX));
    g.ky = kernel_basis(F, M.map(p, p + EY));
    g.qb = quotient(F, M.map(p - EXY, p), n);
    g.qx = quotient(F, M.map(p - EX, p), n);
    g.qy = quotient(F, M.map(p - EY, p), n);
    return g;
}

Mat coords(const Field& F, const Mat& basis, const Mat& v) {
    auto c = solve_membership(F, basis, v);
    if (!c) throw internal_error("boundary arrow does not land in its target subspace");
    return *c;
}

bool s_reversed(Afam f) {
    switch (f) {
        case Afam::u_ur:
        case Afam::ur_u:
        case Afam::dl_l:
        case Afam::l_dl:
        case Afam::g: return true;
        default: return false;
    }
}

bool diagonal(Vkind k) { return k == Vkind::ur || k == Vkind::dl; }

}  // namespace

BoundaryRep build_boundary(const GridModule& M) {
    const Field& F = M.F;
    BoundaryRep B;
    B.rep.F = F;
    if (M.w.empty()) return B;
    B.w = Window{M.w.lo - EXY, M.w.hi + EXY};
    const Window& W = B.w;
    std::vector<GradeData> gd;
    gd.reserve(W.size());
    for (auto p : W.points()) gd.push_back(grade_data(M, p));
    auto at = [&](Bigrade p) -> const GradeData& { return gd[W.index(p)]; };

    B.rep.dims.assign(6 * W.size(), 0);
    for (auto p : W.points()) {
        const GradeData& g = at(p);
        B.rep.dims[B.vertex(p, Vkind::r)] = g.kx.cols;
        B.rep.dims[B.vertex(p, Vkind::ur)] = g.kxy.cols;
        B.rep.dims[B.vertex(p, Vkind::u)] = g.ky.cols;
        B.rep.dims[B.vertex(p, Vkind::l)] = g.qx.dim();
        B.rep.dims[B.vertex(p, Vkind::dl)] = g.qb.dim();
        B.rep.dims[B.vertex(p, Vkind::d)] = g.qy.dim();
    }

    std::map<std::pair<int, int>, Mat> by_key;  // (family, source grade index) -> matrix
    auto add = [&](Afam fam, Bigrade p, Vkind ks, Bigrade q, Vkind kt, Mat m) {
        by_key[{int(fam), W.index(p)}] = m;
        int s = B.vertex(p, ks), t = B.vertex(q, kt);
        if (B.rep.dims[s] == 0 || B.rep.dims[t] == 0) return;
        int tag = int(B.info.size());
        B.info.push_back({fam, p});
        B.rep.arrows.push_back({s, t, std::move(m), tag});
    };

    for (auto p : W.points()) {
        const GradeData& g = at(p);
        add(Afam::u_ur, p, Vkind::u, p, Vkind::ur, coords(F, g.kxy, g.ky));
        add(Afam::r_ur, p, Vkind::r, p, Vkind::ur, coords(F, g.kxy, g.kx));
        add(Afam::dl_l, p, Vkind::dl, p, Vkind::l, mul(F, g.qx.proj, g.qb.lift));
        add(Afam::dl_d, p, Vkind::dl, p, Vkind::d, mul(F, g.qy.proj, g.qb.lift));
        add(Afam::f, p, Vkind::u, p, Vkind::l, mul(F, g.qx.proj, g.ky));
        add(Afam::g, p, Vkind::r, p, Vkind::d, mul(F, g.qy.proj, g.kx));
        if (W.contains(p + EX)) {
            const GradeData& h = at(p + EX);
            Mat x = M.map(p, p + EX);
            add(Afam::ur_u, p, Vkind::ur, p + EX, Vkind::u, coords(F, h.ky, mul(F, x, g.kxy)));
            add(Afam::d_dl, p, Vkind::d, p + EX, Vkind::dl, mul(F, h.qb.proj, mul(F, x, g.qy.lift)));
        }
        if (W.contains(p + EY)) {
            const GradeData& h = at(p + EY);
            Mat y = M.map(p, p + EY);
            add(Afam::ur_r, p, Vkind::ur, p + EY, Vkind::r, coords(F, h.kx, mul(F, y, g.kxy)));
            add(Afam::l_dl, p, Vkind::l, p + EY, Vkind::dl, mul(F, h.qb.proj, mul(F, y, g.qx.lift)));
        }
    }

    // the six forced zero composites
    auto get = [&](Afam fam, Bigrade p) -> const Mat* {
        if (!W.contains(p)) return nullptr;
        auto it = by_key.find({int(fam), W.index(p)});
        return it == by_key.end() ? nullptr : &it->second;
    };
    auto vanish = [&](const Mat* a, const Mat* b) {
        if (a && b && !mul(F, *b, *a).is_zero()) throw internal_error("boundary composite does not vanish");
    };
    for (auto p : W.points()) {
        vanish(get(Afam::u_ur, p), get(Afam::ur_r, p));
        vanish(get(Afam::r_ur, p), get(Afam::ur_u, p));
        vanish(get(Afam::d_dl, p), get(Afam::dl_l, p + EX));
        vanish(get(Afam::l_dl, p), get(Afam::dl_d, p + EY));
        vanish(get(Afam::ur_u, p), get(Afam::f, p + EX));
        vanish(get(Afam::ur_r, p), get(Afam::g, p + EY));
    }
    B.rep.check();
    return B;
}

bool band_certificate(const QuiverRep& S) {
    int l = 0;
    for (int d : S.dims) {
        if (d == 0) continue;
        if (l != 0 && d != l) return false;
        l = d;
    }
    if (l == 0) return false;
    std::vector<int> degree(S.dims.size(), 0);
    for (const Arrow& a : S.arrows) {
        if (a.m.is_zero()) continue;
        if (a.m.rows != l || a.m.cols != l || rank(S.F, a.m) != l) return false;
        ++degree[a.s];
        ++degree[a.t];
    }
    for (std::size_t v = 0; v < S.dims.size(); ++v)
        if (S.dims[v] > 0 && degree[v] < 2) return false;
    return true;
}

std::vector<QuiverRep> decompose_boundary(const BoundaryRep& B, const DecompOptions& opt) {
    std::vector<QuiverRep> out;
    if (B.rep.total_dim() == 0) return out;
    for (Summand& s : decompose(B.rep, opt).summands) {
        if (!band_certificate(s.rep)) throw internal_error("boundary summand fails the band certificate");
        out.push_back(std::move(s.rep));
    }
    return out;
}

std::vector<Bigrade> canonical_rotation(std::vector<Bigrade> g) {
    std::vector<Bigrade> best = g;
    for (std::size_t k = 1; k < g.size(); ++k) {
        std::rotate(g.begin(), g.begin() + 1, g.end());
        if (g < best) best = g;
    }
    return best;
}

bool is_closed_curve(const std::vector<Bigrade>& g) {
    std::size_t n = g.size();
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Bigrade d = g[(i + 1) % n] - g[i];
        if (std::abs(d.x) + std::abs(d.y) > 1) return false;
    }
    // not a proper power
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + p < n && periodic; ++i) periodic = g[i] == g[i + p];
        if (periodic) return false;
    }
    return true;
}

std::vector<Poly> invariant_factors(const Field& F, const Mat& T) {
    int n = T.rows;
    if (T.cols != n) throw contract_error("invariant_factors: matrix is not square");
    // A = tI - T
    std::vector<std::vector<Poly>> A(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e{F.neg(T(i, j))};
            if (i == j) e.push_back(1);
            poly::trim(e);
            A[i][j] = e;
        }
    auto axpy = [&](std::vector<Poly>& dst, const std::vector<Poly>& src, const Poly& q) {
        for (int j = 0; j < n; ++j) dst[j] = poly::sub(F, dst[j], poly::mul(F, q, src[j]));
    };
    std::vector<Poly> diag;
    for (int k = 0; k < n; ++k) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (!A[i][j].empty() && (bi < 0 || poly::deg(A[i][j]) < poly::deg(A[bi][bj]))) bi = i, bj = j;
            if (bi < 0) break;
            std::swap(A[k], A[bi]);
            for (int i = 0; i < n; ++i) std::swap(A[i][k], A[i][bj]);
            bool clean = true;
            for (int i = k + 1; i < n; ++i) {
                Poly q, r;
                poly::divmod(F, A[i][k], A[k][k], q, r);
                axpy(A[i], A[k], q);
                if (!r.empty()) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                Poly q, r;
                poly::divmod(F, A[k][j], A[k][k], q, r);
                for (int i = 0; i < n; ++i) A[i][j] = poly::sub(F, A[i][j], poly::mul(F, q, A[i][k]));
                if (!r.empty()) clean = false;
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = k + 1; i < n && bad < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (!poly::mod(F, A[i][j], A[k][k]).empty()) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = 0; j < n; ++j) A[k][j] = poly::add(F, A[k][j], A[bad][j]);
        }
        diag.push_back(poly::monic(F, A[k][k]));
    }
    std::vector<Poly> out;
    for (const Poly& d : diag)
        if (poly::deg(d) >= 1) out.push_back(d);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return poly::deg(a) != poly::deg(b) ? poly::deg(a) < poly::deg(b) : a < b;
    });
    return out;
}

namespace {

std::vector<Bigrade> merge_cyclic(const std::vector<Bigrade>& seq) {
    std::vector<Bigrade> g;
    for (auto p : seq)
        if (g.empty() || g.back() != p) g.push_back(p);
    while (g.size() > 1 && g.front() == g.back()) g.pop_back();
    return g;
}

bool indecomposable_class(const Field& F, const std::vector<Poly>& f) {
    if (f.size() != 1 || f[0].empty() || f[0][0] == 0) return false;
    return poly::is_irreducible(F, poly::squarefree_part(F, f[0])) &&
           [&] {
               // f is a power of its squarefree part
               Poly s = poly::squarefree_part(F, f[0]), r = f[0];
               while (poly::deg(r) > 0) {
                   Poly q, m;
                   poly::divmod(F, r, s, q, m);
                   if (!m.empty()) return false;
                   r = q;
               }
               return true;
           }();
}

}  // namespace

BoundaryComponent extract_component(const BoundaryRep& B, const QuiverRep& S, bool keep_raw) {
    const Field& F = S.F;
    int nv = int(S.dims.size());
    int start = -1, l = 0;
    for (int v = 0; v < nv; ++v) {
        if (S.dims[v] == 0) continue;
        l = S.dims[v];
        if (!diagonal(B.kind_of(v))) continue;
        auto key = [&](int w) { return std::pair{B.grade_of(w), B.kind_of(w) == Vkind::dl ? 0 : 1}; };
        if (start < 0 || key(v) < key(start)) start = v;
    }
    if (start < 0) throw internal_error("boundary summand has no diagonal vertex");

    std::vector<std::vector<int>> out(nv);
    for (int k = 0; k < int(S.arrows.size()); ++k) {
        const Arrow& a = S.arrows[k];
        if (a.m.is_zero()) continue;
        out[s_reversed(B.info[a.tag].fam) ? a.t : a.s].push_back(k);
    }

    Mat P = Mat::identity(l);
    std::vector<Bigrade> seq;
    std::vector<char> seen(nv, 0);
    int cur = start, visited = 0;
    do {
        if (seen[cur]) throw internal_error("boundary cycle revisits a vertex before closing");
        seen[cur] = 1;
        ++visited;
        if (diagonal(B.kind_of(cur))) seq.push_back(B.grade_of(cur));
        if (out[cur].size() != 1) throw internal_error("boundary cycle is not uniquely oriented");
        const Arrow& a = S.arrows[out[cur][0]];
        if (s_reversed(B.info[a.tag].fam)) {
            auto inv = inverse(F, a.m);
            if (!inv) throw internal_error("non-invertible transition in boundary cycle");
            P = mul(F, *inv, P);
            cur = a.s;
        } else {
            P = mul(F, a.m, P);
            cur = a.t;
        }
    } while (cur != start);
    int support = 0;
    for (int d : S.dims) support += d > 0;
    if (visited != support) throw internal_error("boundary cycle does not cover the summand");

    BoundaryComponent c;
    c.curve = canonical_rotation(merge_cyclic(seq));
    if (!is_closed_curve(c.curve)) throw internal_error("boundary curve is not an irreducible closed curve");
    c.monodromy = invariant_factors(F, P);
    if (!indecomposable_class(F, c.monodromy)) throw internal_error("boundary monodromy is decomposable");
    if (keep_raw) c.raw_T = P;
    return c;
}

std::vector<BoundaryComponent> boundary_components(const GridModule& M, const DecompOptions& opt) {
    BoundaryRep B = build_boundary(M);
    std::vector<BoundaryComponent> out;
    for (const QuiverRep& S : decompose_boundary(B, opt)) out.push_back(extract_component(B, S));
    std::sort(out.begin(), out.end());
    return out;
}

bool components_equal(const BoundaryComponent& a, const BoundaryComponent& b) {
    return canonical_rotation(a.curve) == canonical_rotation(b.curve) && a.monodromy == b.monodromy;
}

BoundaryComponent spread_boundary_oracle(const Field& F, const std::set<Bigrade>& I) {
    auto along = [](const Bigrade& a, const Bigrade& b) { return a.x != b.x ? a.x < b.x : a.y > b.y; };
    std::vector<Bigrade> birth, death;
    for (auto p : I) {
        if (!I.count(p - EXY)) birth.push_back(p);
        if (!I.count(p + EXY)) death.push_back(p);
    }
    std::sort(birth.begin(), birth.end(), along);
    std::sort(death.begin(), death.end(), along);
    std::vector<Bigrade> seq = birth;
    seq.insert(seq.end(), death.rbegin(), death.rend());
    BoundaryComponent c;
    c.curve = canonical_rotation(merge_cyclic(seq));
    c.monodromy = {Poly{F.neg(1), 1}};
    return c;
}

std::string render_svg(const GridModule& M, const std::vector<BoundaryComponent>& comps, const DecompOptions& opt) {
    const int cell = 40, pad = 30;
    Window w = M.w.empty() ? Window{{0, 0}, {0, 0}} : Window{M.w.lo - EXY, M.w.hi + EXY};
    int W = w.width() * cell + 2 * pad, H = w.height() * cell + 2 * pad;
    auto X = [&](double x) { return pad + (x - w.lo.x + 0.5) * cell; };
    auto Y = [&](double y) { return H - pad - (y - w.lo.y + 0.5) * cell; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (auto p : w.points())
        s << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
    auto curve = [&](const Curve& c, const char* dash, const char* color) {
        std::vector<Bigrade> v(c.begin(), c.end());
        std::sort(v.begin(), v.end(), [](Bigrade a, Bigrade b) { return a.x != b.x ? a.x < b.x : a.y > b.y; });
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\"" << dash << " points=\"";
        for (auto p : v) s << X(p.x) << "," << Y(p.y) << " ";
        s << "\"/>\n";
    };
    if (!M.is_zero()) {
        for (const Curve& c : births(M, opt)) curve(c, "", "#1f5fbf");
        for (const Curve& c : deaths(M, opt)) curve(shift_curves({c}, EXY)[0], " stroke-dasharray=\"6,4\"", "#bf3f1f");
        CornerData cd = corner_data(M);
        const double r = cell * 0.25;
        for (auto p : cd.topleft)
            s << "<path d=\"M " << X(p.x) - r << " " << Y(p.y) << " A " << r << " " << r << " 0 0 1 " << X(p.x) + r
              << " " << Y(p.y) << " Z\" transform=\"rotate(-45 " << X(p.x) << " " << Y(p.y)
              << ")\" fill=\"#2a8f3a\"/>\n";
        for (auto p : cd.botright)
            s << "<path d=\"M " << X(p.x) - r << " " << Y(p.y) << " A " << r << " " << r << " 0 0 0 " << X(p.x) + r
              << " " << Y(p.y) << " Z\" transform=\"rotate(-45 " << X(p.x) << " " << Y(p.y)
              << ")\" fill=\"#8f2a7a\"/>\n";
    }
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const auto& g = comps[k].curve;
        double off = 0.08 * (double(k % 5) - 2.0);
        s << "<polygon fill=\"none\" stroke=\"#222\" stroke-width=\"1.2\" opacity=\"0.8\" points=\"";
        // retraced stretches are pushed apart by the winding side
        for (std::size_t i = 0; i < g.size(); ++i) {
            Bigrade a = g[i], b = g[(i + 1) % g.size()];
            double nx = -(b.y - a.y), ny = b.x - a.x;
            s << X(a.x + off + 0.08 * nx) << "," << Y(a.y + off + 0.08 * ny) << " ";
        }
        s << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace bgm
