#include "bgm/betti.hpp"

#include <algorithm>

namespace bgm {

BettiTables koszul_betti(const GridModule& M) {
    const Field& F = M.F;
    BettiTables t;
    if (M.w.empty()) return t;
    Window g{M.w.lo, M.w.hi + EXY};
    for (auto l : g.points()) {
        Bigrade bl = l - EXY, br = l - EY, tl = l - EX;
        Mat d2 = vcat(M.map(bl, br), scale(F, F.neg(1), M.map(bl, tl)));
        Mat d1 = hcat(M.map(br, l), M.map(tl, l));
        int r2 = rank(F, d2), r1 = rank(F, d1);
        int k1 = M.dim(br) + M.dim(tl) - r1;
        int b0 = M.dim(l) - r1, b1 = k1 - r2, b2 = M.dim(bl) - r2;
        for (int k = 0; k < b0; ++k) t.b0.push_back(l);
        for (int k = 0; k < b1; ++k) t.b1.push_back(l);
        for (int k = 0; k < b2; ++k) t.b2.push_back(l);
    }
    std::sort(t.b0.begin(), t.b0.end());
    std::sort(t.b1.begin(), t.b1.end());
    std::sort(t.b2.begin(), t.b2.end());
    return t;
}

std::set<Bigrade> square_type_support(char t, Bigrade l) {
    Bigrade BL = l - EXY, BR = l - EY, TL = l - EX, TR = l;
    switch (t) {
        case 'a': return {BL};
        case 'b': return {BR};
        case 'c': return {TL};
        case 'd': return {TR};
        case 'e': return {TL, BL};
        case 'f': return {BL, BR};
        case 'g': return {TL, TR};
        case 'h': return {TR, BR};
        case 'i': return {TL, BL, BR};
        case 'j': return {TL, TR, BR};
        case 'k': return {TL, TR, BL, BR};
    }
    throw contract_error("unknown square type");
}

namespace {

// dim of the image of span(U) in M_p / span(V)
int image_in_quotient(const Field& F, const Mat& U, const Mat& V) {
    return rank(F, hcat(U, V)) - rank(F, V);
}

}  // namespace

SquareFormulas square_formulas(const GridModule& M, Bigrade l) {
    const Field& F = M.F;
    Bigrade BL = l - EXY, BR = l - EY, TL = l - EX;
    Mat x_bl = M.map(BL, BR), y_bl = M.map(BL, TL), xy = M.map(BL, l);
    Mat y_br = M.map(BR, l), x_tl = M.map(TL, l);
    SquareFormulas s;
    s.a = M.dim(BL) - rank(F, vcat(x_bl, y_bl));
    s.b = image_in_quotient(F, kernel_basis(F, y_br), x_bl);
    s.c = image_in_quotient(F, kernel_basis(F, x_tl), y_bl);
    s.d = M.dim(l) - rank(F, hcat(x_tl, y_br));
    s.i = rank(F, kernel_basis(F, xy)) - rank(F, hcat(kernel_basis(F, x_bl), kernel_basis(F, y_bl)));
    // pairs (w, z) in TL/yBL ⊕ BR/xBL with xw - yz in xyBL
    Quotient qt = quotient(F, column_basis(F, y_bl), M.dim(TL));
    Quotient qb = quotient(F, column_basis(F, x_bl), M.dim(BR));
    Quotient qr = quotient(F, column_basis(F, xy), M.dim(l));
    Mat m = hcat(mul(F, qr.proj, mul(F, x_tl, qt.lift)), scale(F, F.neg(1), mul(F, qr.proj, mul(F, y_br, qb.lift))));
    s.jbc = qt.dim() + qb.dim() - rank(F, m);
    return s;
}

SquareCounts square_counts(const GridModule& M, Bigrade l, const DecompOptions& opt) {
    Window sq{l - EXY, l};
    GridModule R = restrict_to(M, sq);
    SquareCounts c;
    if (!R.is_zero()) {
        for (const GridModule& S : decompose_grid(R, opt).modules) {
            auto I = S.support();
            bool thin = std::all_of(S.dims.begin(), S.dims.end(), [](int d) { return d <= 1; });
            char found = 0;
            for (char t = 'a'; t <= 'k'; ++t)
                if (square_type_support(t, l) == I) found = t;
            if (!thin || !found) throw internal_error("square summand matches none of the eleven types");
            c[found] += 1;
        }
    }
    SquareFormulas f = square_formulas(M, l);
    if (f.a != c['a'] || f.b != c['b'] || f.c != c['c'] || f.d != c['d'] || f.i != c['i'] ||
        f.jbc != c['j'] + c['b'] + c['c'])
        throw internal_error("square tally disagrees with the closed formulas");
    return c;
}

BettiTables betti_from_curves(const CurveMultiset& births, const CurveMultiset& deaths, const CornerData& corners_) {
    BettiTables t;
    for (const Curve& c : births) {
        auto k = corners(c);
        t.b0.insert(t.b0.end(), k.convex.begin(), k.convex.end());
        t.b1.insert(t.b1.end(), k.inner_concave.begin(), k.inner_concave.end());
    }
    for (const Curve& c : deaths) {
        auto k = corners(c);
        t.b1.insert(t.b1.end(), k.inner_convex.begin(), k.inner_convex.end());
        t.b2.insert(t.b2.end(), k.concave.begin(), k.concave.end());
    }
    t.b1.insert(t.b1.end(), corners_.topleft.begin(), corners_.topleft.end());
    t.b1.insert(t.b1.end(), corners_.botright.begin(), corners_.botright.end());
    std::sort(t.b0.begin(), t.b0.end());
    std::sort(t.b1.begin(), t.b1.end());
    std::sort(t.b2.begin(), t.b2.end());
    return t;
}

BettiTables betti_from_curves(const GridModule& M, const DecompOptions& opt) {
    return betti_from_curves(births(M, opt), deaths(M, opt), corner_data(M));
}

}  // namespace bgm
