#include "bgm/endcurves.hpp"

#include <algorithm>

namespace bgm {

GridModule subquotient(const GridModule& M, const std::vector<Mat>& A, const std::vector<Mat>& B) {
    const Field& F = M.F;
    const Window& w = M.w;
    std::vector<Quotient> q(w.size());
    GridModule S(F, w);
    for (int i = 0; i < w.size(); ++i) {
        auto b = solve_membership(F, A[i], B[i]);
        if (!b) throw internal_error("subquotient: B is not contained in A");
        q[i] = quotient(F, *b, A[i].cols);
        S.dims[i] = q[i].dim();
    }
    auto induce = [&](int i, Bigrade target, const Mat& phi) {
        if (!w.contains(target)) return Mat(0, S.dims[i]);
        int j = w.index(target);
        Mat img = mul(F, phi, mul(F, A[i], q[i].lift));
        auto c = solve_membership(F, A[j], img);
        if (!c) throw internal_error("subquotient: A is not a submodule");
        return mul(F, q[j].proj, *c);
    };
    for (auto p : w.points()) {
        int i = w.index(p);
        S.xm[i] = induce(i, p + EX, M.xmap(p));
        S.ym[i] = induce(i, p + EY, M.ymap(p));
    }
    return S;
}

namespace {

std::vector<Mat> whole(const GridModule& M) {
    std::vector<Mat> A;
    for (auto p : M.w.points()) A.push_back(Mat::identity(M.dim(p)));
    return A;
}

std::vector<Mat> zeros(const GridModule& M) {
    std::vector<Mat> A;
    for (auto p : M.w.points()) A.push_back(Mat(M.dim(p), 0));
    return A;
}

std::vector<Mat> kernels(const GridModule& M, Bigrade step) {
    std::vector<Mat> A;
    for (auto p : M.w.points()) A.push_back(kernel_basis(M.F, M.map(p, p + step)));
    return A;
}

std::vector<Mat> images(const GridModule& M, Bigrade step) {
    std::vector<Mat> A;
    for (auto p : M.w.points()) A.push_back(column_basis(M.F, M.map(p - step, p)));
    return A;
}

std::vector<Mat> sums(const GridModule& M, const std::vector<Mat>& U, const std::vector<Mat>& V) {
    std::vector<Mat> A;
    for (std::size_t i = 0; i < U.size(); ++i) A.push_back(column_basis(M.F, hcat(U[i], V[i])));
    return A;
}

}  // namespace

GridModule ker_xy_closed(const GridModule& M) { return subquotient(M, kernels(M, EXY), zeros(M)); }
GridModule ker_x_closed(const GridModule& M) { return subquotient(M, kernels(M, EX), zeros(M)); }
GridModule ker_y_closed(const GridModule& M) { return subquotient(M, kernels(M, EY), zeros(M)); }
GridModule ker_xy(const GridModule& M) { return shift(ker_xy_closed(M), -EXY); }
GridModule ker_x(const GridModule& M) { return shift(ker_x_closed(M), -EX); }
GridModule ker_y(const GridModule& M) { return shift(ker_y_closed(M), -EY); }
GridModule coker_xy(const GridModule& M) { return subquotient(M, whole(M), images(M, EXY)); }
GridModule coker_x(const GridModule& M) { return subquotient(M, whole(M), images(M, EX)); }
GridModule coker_y(const GridModule& M) { return subquotient(M, whole(M), images(M, EY)); }
GridModule image_xy(const GridModule& M) { return subquotient(M, images(M, EXY), zeros(M)); }

GridModule topleft(const GridModule& M) {
    GridModule E = extend(M, {M.w.lo, M.w.hi + EY});
    auto xim = images(E, EX);
    GridModule S = subquotient(E, sums(E, kernels(E, EY), xim), xim);
    return shift(S, -EY);
}

GridModule botright(const GridModule& M) {
    GridModule E = extend(M, {M.w.lo, M.w.hi + EX});
    auto yim = images(E, EY);
    GridModule S = subquotient(E, sums(E, kernels(E, EX), yim), yim);
    return shift(S, -EX);
}

namespace {

bool kills(const GridModule& M, Bigrade step) {
    for (auto p : M.w.points())
        if (M.dim(p) && !M.map(p, p + step).is_zero()) return false;
    return true;
}

}  // namespace

bool is_ephemeral(const GridModule& M) { return kills(M, EXY); }
bool is_x_annihilated(const GridModule& M) { return kills(M, EX); }
bool is_y_annihilated(const GridModule& M) { return kills(M, EY); }

bool is_spread_curve(const Curve& I) {
    if (!is_spread(I)) return false;
    for (auto p : I)
        if (I.count(p + EXY)) return false;
    return true;
}

CurveMultiset decompose_ephemeral(const GridModule& M, const DecompOptions& opt) {
    if (!is_ephemeral(M)) throw precondition_error("module is not annihilated by xy");
    CurveMultiset out;
    if (M.is_zero()) return out;
    for (const GridModule& S : decompose_grid(M, opt).modules) {
        for (int d : S.dims)
            if (d > 1) throw internal_error("ephemeral summand has a point of dimension above one");
        Curve I = S.support();
        if (!is_spread_curve(I)) throw internal_error("ephemeral summand support is not a spread curve");
        for (auto p : I) {
            if (I.count(p + EX) && S.xmap(p).is_zero()) throw internal_error("summand is not a spread module");
            if (I.count(p + EY) && S.ymap(p).is_zero()) throw internal_error("summand is not a spread module");
        }
        out.push_back(I);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CurveMultiset births(const GridModule& M, const DecompOptions& opt) { return decompose_ephemeral(coker_xy(M), opt); }
CurveMultiset deaths(const GridModule& M, const DecompOptions& opt) { return decompose_ephemeral(ker_xy(M), opt); }

CurveMultiset shift_curves(const CurveMultiset& C, Bigrade d) {
    CurveMultiset out;
    for (const Curve& c : C) {
        Curve s;
        for (auto p : c) s.insert(p + d);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CurveCorners corners(const Curve& I) {
    CurveCorners c;
    for (auto i : I) {
        if (!I.count(i - EX) && !I.count(i - EY)) c.convex.insert(i);
        if (I.count(i + EX) && I.count(i + EY)) c.inner_convex.insert(i);
        if (!I.count(i + EX) && !I.count(i + EY)) c.concave.insert(i);
        if (I.count(i - EX) && I.count(i - EY)) c.inner_concave.insert(i);
    }
    return c;
}

std::vector<Bigrade> as_multiset(const GridModule& S) {
    std::vector<Bigrade> out;
    for (auto p : S.w.points())
        for (int k = 0; k < S.dim(p); ++k) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

CornerData corner_data(const GridModule& M) { return {as_multiset(topleft(M)), as_multiset(botright(M))}; }

Presentation presentation_cokerxy(const Presentation& pr) {
    pr.validate();
    Presentation out = pr;
    int n = int(pr.gens.size());
    Mat extra(n, n);
    for (int i = 0; i < n; ++i) {
        out.rels.push_back(pr.gens[i] + EXY);
        extra(i, i) = 1;
    }
    out.mat = hcat(pr.mat, extra);
    return out;
}

Presentation presentation_kerxy(const Presentation& pr) {
    // ker^c M = D coker_xy D M, then move to the open convention
    Presentation closed = dual_presentation(presentation_cokerxy(dual_presentation(pr)));
    return shift(closed, -EXY);
}

}  // namespace bgm
