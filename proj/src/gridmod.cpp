#include "bgm/gridmod.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace bgm {

std::vector<Bigrade> Window::points() const {
    std::vector<Bigrade> v;
    v.reserve(size());
    for (int i = 0; i < size(); ++i) v.push_back(point(i));
    return v;
}

Window hull(const Window& a, const Window& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {meet(a.lo, b.lo), join(a.hi, b.hi)};
}

Window bounding(const std::set<Bigrade>& pts) {
    if (pts.empty()) return {};
    Bigrade lo = *pts.begin(), hi = lo;
    for (auto p : pts) {
        lo = meet(lo, p);
        hi = join(hi, p);
    }
    return {lo, hi};
}

GridModule::GridModule(Field f, Window win) : F(f), w(win) {
    int n = w.size();
    dims.assign(n, 0);
    xm.assign(n, Mat());
    ym.assign(n, Mat());
}

Mat GridModule::xmap(Bigrade p) const {
    if (!w.contains(p)) return Mat(dim(p + EX), 0);
    return xm[w.index(p)];
}

Mat GridModule::ymap(Bigrade p) const {
    if (!w.contains(p)) return Mat(dim(p + EY), 0);
    return ym[w.index(p)];
}

Mat GridModule::map(Bigrade a, Bigrade b) const {
    if (!leq(a, b)) throw contract_error("map: a is not below b");
    Mat m = Mat::identity(dim(a));
    Bigrade c = a;
    while (c.x < b.x) {
        if (m.rows == 0) return Mat(dim(b), dim(a));
        m = mul(F, xmap(c), m);
        c = c + EX;
    }
    while (c.y < b.y) {
        if (m.rows == 0) return Mat(dim(b), dim(a));
        m = mul(F, ymap(c), m);
        c = c + EY;
    }
    return m;
}

void GridModule::set_dim(Bigrade p, int d) {
    if (!w.contains(p)) throw contract_error("set_dim outside window");
    dims[w.index(p)] = d;
}

void GridModule::set_xmap(Bigrade p, Mat m) {
    if (!w.contains(p)) throw contract_error("set_xmap outside window");
    xm[w.index(p)] = std::move(m);
}

void GridModule::set_ymap(Bigrade p, Mat m) {
    if (!w.contains(p)) throw contract_error("set_ymap outside window");
    ym[w.index(p)] = std::move(m);
}

int GridModule::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

std::set<Bigrade> GridModule::support() const {
    std::set<Bigrade> s;
    for (int i = 0; i < w.size(); ++i)
        if (dims[i]) s.insert(w.point(i));
    return s;
}

bool GridModule::commutes() const {
    for (auto p : w.points()) {
        Mat a = mul(F, ymap(p + EX), xmap(p));
        Mat b = mul(F, xmap(p + EY), ymap(p));
        if (!(a == b)) return false;
    }
    return true;
}

void GridModule::check() const {
    for (auto p : w.points()) {
        const Mat& a = xm[w.index(p)];
        const Mat& b = ym[w.index(p)];
        if (a.cols != dim(p) || a.rows != dim(p + EX) || b.cols != dim(p) || b.rows != dim(p + EY))
            throw contract_error("structure map shape mismatch");
    }
    if (!commutes()) throw contract_error("structure maps do not commute");
}

GridModule extend(const GridModule& M, Window w) {
    GridModule N(M.F, w);
    for (auto p : w.points()) {
        N.set_dim(p, M.dim(p));
    }
    for (auto p : w.points()) {
        N.set_xmap(p, w.contains(p + EX) ? M.xmap(p) : Mat(0, M.dim(p)));
        N.set_ymap(p, w.contains(p + EY) ? M.ymap(p) : Mat(0, M.dim(p)));
    }
    return N;
}

GridModule restrict_to(const GridModule& M, Window w) { return extend(M, w); }

GridModule trim(const GridModule& M) {
    auto s = M.support();
    if (s.empty()) return GridModule(M.F, Window{});
    return extend(M, bounding(s));
}

bool is_connected(const std::set<Bigrade>& I) {
    if (I.empty()) return false;
    std::set<Bigrade> seen{*I.begin()};
    std::queue<Bigrade> q;
    q.push(*I.begin());
    const Bigrade steps[4] = {EX, EY, -EX, -EY};
    while (!q.empty()) {
        Bigrade p = q.front();
        q.pop();
        for (auto s : steps) {
            Bigrade n = p + s;
            if (I.count(n) && !seen.count(n)) {
                seen.insert(n);
                q.push(n);
            }
        }
    }
    return seen.size() == I.size();
}

bool is_convex(const std::set<Bigrade>& I) {
    Window b = bounding(I);
    for (auto j : b.points()) {
        if (I.count(j)) continue;
        bool below = false, above = false;
        for (auto i : I) {
            below = below || leq(i, j);
            above = above || leq(j, i);
        }
        if (below && above) return false;
    }
    return true;
}

bool is_spread(const std::set<Bigrade>& I) { return is_connected(I) && is_convex(I); }

GridModule spread_module(const Field& F, const std::set<Bigrade>& I, Window w) {
    if (!is_spread(I)) throw invalid_spread("point set is not a connected convex subset");
    for (auto p : I)
        if (!w.contains(p)) throw invalid_spread("spread leaves the window");
    GridModule M(F, w);
    for (auto p : I) M.set_dim(p, 1);
    for (auto p : w.points()) {
        Mat a(M.dim(p + EX), M.dim(p)), b(M.dim(p + EY), M.dim(p));
        if (a.rows && a.cols) a(0, 0) = 1;
        if (b.rows && b.cols) b(0, 0) = 1;
        M.set_xmap(p, a);
        M.set_ymap(p, b);
    }
    return M;
}

GridModule spread_module(const Field& F, const std::set<Bigrade>& I) {
    return spread_module(F, I, bounding(I));
}

void Presentation::validate() const {
    if (mat.rows != int(gens.size()) || mat.cols != int(rels.size()))
        throw invalid_presentation("matrix shape does not match grade lists");
    for (int i = 0; i < mat.rows; ++i)
        for (int j = 0; j < mat.cols; ++j)
            if (mat(i, j) && !leq(gens[i], rels[j]))
                throw invalid_presentation("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is nonzero but generator grade is not below relation grade");
    for (elem v : mat.a)
        if (v >= F.p) throw invalid_presentation("entry not reduced modulo p");
}

Presentation free_presentation(const Field& F, const std::vector<Bigrade>& gens) {
    return Presentation{F, gens, {}, Mat(int(gens.size()), 0)};
}

namespace {

std::vector<int> below(const std::vector<Bigrade>& g, Bigrade p) {
    std::vector<int> idx;
    for (int i = 0; i < int(g.size()); ++i)
        if (leq(g[i], p)) idx.push_back(i);
    return idx;
}

struct PointData {
    std::vector<int> gens;
    Quotient q;
};

PointData point_data(const Presentation& pr, Bigrade p) {
    PointData d;
    d.gens = below(pr.gens, p);
    std::vector<int> rl = below(pr.rels, p);
    Mat sub = pr.mat.rows_of(d.gens).cols_of(rl);
    d.q = quotient(pr.F, sub, int(d.gens.size()));
    return d;
}

Mat induced(const Field& F, const PointData& a, const PointData& b) {
    // inclusion of generator coordinates a.gens ⊆ b.gens
    Mat inc(int(b.gens.size()), int(a.gens.size()));
    std::size_t k = 0;
    for (int i = 0; i < int(a.gens.size()); ++i) {
        while (b.gens[k] != a.gens[i]) ++k;
        inc(int(k), i) = 1;
    }
    return mul(F, b.q.proj, mul(F, inc, a.q.lift));
}

}  // namespace

GridModule evaluate_presentation(const Presentation& pr, Window w) {
    pr.validate();
    GridModule M(pr.F, w);
    std::vector<PointData> pd;
    pd.reserve(w.size());
    for (auto p : w.points()) {
        pd.push_back(point_data(pr, p));
        M.set_dim(p, pd.back().q.dim());
    }
    for (auto p : w.points()) {
        const PointData& a = pd[w.index(p)];
        M.set_xmap(p, w.contains(p + EX) ? induced(pr.F, a, pd[w.index(p + EX)]) : Mat(0, a.q.dim()));
        M.set_ymap(p, w.contains(p + EY) ? induced(pr.F, a, pd[w.index(p + EY)]) : Mat(0, a.q.dim()));
    }
    return M;
}

GridModule shift(const GridModule& M, Bigrade v) {
    GridModule N(M.F, Window{M.w.lo - v, M.w.hi - v});
    for (int i = 0; i < M.w.size(); ++i) {
        N.dims[i] = M.dims[i];
        N.xm[i] = M.xm[i];
        N.ym[i] = M.ym[i];
    }
    return N;
}

Presentation shift(const Presentation& pr, Bigrade v) {
    Presentation out = pr;
    for (auto& g : out.gens) g = g - v;
    for (auto& r : out.rels) r = r - v;
    return out;
}

GridModule direct_sum(const GridModule& M, const GridModule& N) {
    if (!(M.F == N.F)) throw contract_error("direct_sum: field mismatch");
    Window w = hull(M.w, N.w);
    GridModule A = extend(M, w), B = extend(N, w);
    GridModule S(M.F, w);
    for (int i = 0; i < w.size(); ++i) {
        S.dims[i] = A.dims[i] + B.dims[i];
        S.xm[i] = block_diag(A.xm[i], B.xm[i]);
        S.ym[i] = block_diag(A.ym[i], B.ym[i]);
    }
    return S;
}

GridModule dualize(const GridModule& M) {
    Window w{-M.w.hi, -M.w.lo};
    GridModule D(M.F, w);
    for (auto p : w.points()) D.set_dim(p, M.dim(-p));
    for (auto p : w.points()) {
        D.set_xmap(p, w.contains(p + EX) ? M.xmap(-p - EX).transpose() : Mat(0, D.dim(p)));
        D.set_ymap(p, w.contains(p + EY) ? M.ymap(-p - EY).transpose() : Mat(0, D.dim(p)));
    }
    return D;
}

Syzygy syzygy(const Presentation& pr) {
    pr.validate();
    const Field& F = pr.F;
    Syzygy s;
    s.mat = Mat(int(pr.rels.size()), 0);
    if (pr.rels.empty()) return s;
    Bigrade lo = pr.rels[0], hi = pr.rels[0];
    for (auto r : pr.rels) {
        lo = meet(lo, r);
        hi = join(hi, r);
    }
    std::vector<Bigrade> order = Window{lo, hi}.points();
    std::sort(order.begin(), order.end(), [](Bigrade a, Bigrade b) {
        return std::pair(a.x + a.y, a.x) < std::pair(b.x + b.y, b.x);
    });
    std::vector<Mat> found;  // full-length columns
    for (auto p : order) {
        std::vector<int> rl = below(pr.rels, p);
        if (rl.empty()) continue;
        Mat K = kernel_basis(F, pr.mat.cols_of(rl));
        if (K.cols == 0) continue;
        std::vector<int> earlier;
        for (int k = 0; k < int(s.grades.size()); ++k)
            if (leq(s.grades[k], p)) earlier.push_back(k);
        Mat S(int(rl.size()), 0);
        for (int k : earlier) S = hcat(S, found[k].rows_of(rl));
        Echelon e = rref(F, hcat(S, K));
        for (int c : e.pivots) {
            if (c < S.cols) continue;
            Mat v(int(pr.rels.size()), 1);
            for (int t = 0; t < int(rl.size()); ++t) v(rl[t], 0) = K(t, c - S.cols);
            found.push_back(v);
            s.grades.push_back(p);
        }
    }
    for (auto& v : found) s.mat = hcat(s.mat, v);
    return s;
}

Presentation dual_presentation(const Presentation& pr) {
    Syzygy s = syzygy(pr);
    Presentation d;
    d.F = pr.F;
    for (auto g : s.grades) d.gens.push_back(EXY - g);
    for (auto r : pr.rels) d.rels.push_back(EXY - r);
    d.mat = s.mat.transpose();
    return d;
}

namespace {

int dim_at(const Presentation& pr, Bigrade p) {
    std::vector<int> g = below(pr.gens, p), r = below(pr.rels, p);
    return int(g.size()) - rank(pr.F, pr.mat.rows_of(g).cols_of(r));
}

}  // namespace

bool is_finite_length(const Presentation& pr) {
    if (pr.gens.empty()) return true;
    Bigrade lo = pr.gens[0], hi = pr.gens[0];
    for (auto g : pr.gens) lo = meet(lo, g), hi = join(hi, g);
    for (auto r : pr.rels) hi = join(hi, r);
    // beyond hi every structure map is an isomorphism, so it suffices to look
    // at the last column and the last row of the bounding box
    for (int y = lo.y; y <= hi.y; ++y)
        if (dim_at(pr, {hi.x, y})) return false;
    for (int x = lo.x; x <= hi.x; ++x)
        if (dim_at(pr, {x, hi.y})) return false;
    return true;
}

Window support_window(const Presentation& pr) {
    if (!is_finite_length(pr)) throw contract_error("presented module does not have finite length");
    if (pr.gens.empty()) return {};
    Bigrade lo = pr.gens[0], hi = pr.gens[0];
    for (auto g : pr.gens) lo = meet(lo, g), hi = join(hi, g);
    for (auto r : pr.rels) hi = join(hi, r);
    return {lo, hi - EXY};
}

Presentation random_presentation(const Field& F, int ngens, int nrels, Window w, std::uint64_t seed, bool clip) {
    std::mt19937_64 rng(seed);
    auto grade = [&] {
        std::uniform_int_distribution<int> dx(w.lo.x, w.hi.x), dy(w.lo.y, w.hi.y);
        int x = dx(rng);
        return Bigrade{x, dy(rng)};
    };
    std::uniform_int_distribution<elem> coef(0, F.p - 1);
    Presentation pr;
    pr.F = F;
    for (int i = 0; i < ngens; ++i) pr.gens.push_back(grade());
    std::vector<std::vector<elem>> cols;
    for (int j = 0; j < nrels; ++j) {
        Bigrade r = grade();
        std::vector<elem> c(ngens, 0);
        for (int i = 0; i < ngens; ++i)
            if (leq(pr.gens[i], r)) c[i] = coef(rng);
        pr.rels.push_back(r);
        cols.push_back(c);
    }
    if (clip) {
        for (int i = 0; i < ngens; ++i) {
            for (Bigrade r : {Bigrade{w.hi.x + 1, pr.gens[i].y}, Bigrade{pr.gens[i].x, w.hi.y + 1}}) {
                std::vector<elem> c(ngens, 0);
                c[i] = 1;
                pr.rels.push_back(r);
                cols.push_back(c);
            }
        }
    }
    pr.mat = Mat(ngens, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
        for (int i = 0; i < ngens; ++i) pr.mat(i, j) = cols[j][i];
    return pr;
}

std::vector<int> rank_profile(const GridModule& M, Window w) {
    std::vector<int> out;
    auto pts = w.points();
    for (auto a : pts)
        for (auto b : pts)
            if (leq(a, b)) out.push_back(rank(M.F, M.map(a, b)));
    return out;
}

bool same_dims_and_ranks(const GridModule& A, const GridModule& B) {
    Window w = hull(A.w, B.w);
    GridModule a = extend(A, w), b = extend(B, w);
    if (a.dims != b.dims) return false;
    // the rank of φ_{p,q} is zero whenever either endpoint vanishes
    std::vector<Bigrade> pts;
    for (auto p : w.points())
        if (a.dim(p)) pts.push_back(p);
    for (auto p : pts)
        for (auto q : pts)
            if (leq(p, q) && rank(A.F, a.map(p, q)) != rank(B.F, b.map(p, q))) return false;
    return true;
}

}  // namespace bgm
