#include "bgm/oneparam.hpp"

#include <algorithm>

namespace bgm {

int LineModule::dim(int i) const {
    int k = i - lo;
    return (k >= 0 && k < int(dims.size())) ? dims[k] : 0;
}

int LineModule::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

LineModule line_module(const Field& F, int lo, std::vector<int> dims, std::vector<Mat> maps) {
    LineModule A{F, lo, std::move(dims), std::move(maps)};
    int n = int(A.dims.size());
    if (n && int(A.zmap.size()) == n - 1) A.zmap.push_back(Mat(0, A.dims[n - 1]));
    if (int(A.zmap.size()) != n) throw contract_error("line module needs one map per index");
    for (int k = 0; k < n; ++k) {
        int to = k + 1 < n ? A.dims[k + 1] : 0;
        if (A.zmap[k].rows != to || A.zmap[k].cols != A.dims[k])
            throw contract_error("line module map shape mismatch");
    }
    return A;
}

LineModule bar_module(const Field& F, int b, int d) {
    std::vector<int> dims(std::max(0, d - b), 1);
    std::vector<Mat> maps;
    for (int i = b; i + 1 < d; ++i) maps.push_back(Mat::identity(1));
    return line_module(F, b, dims, maps);
}

LineModule line_sum(const LineModule& A, const LineModule& B) {
    if (A.dims.empty()) return B;
    if (B.dims.empty()) return A;
    int lo = std::min(A.lo, B.lo);
    int hi = std::max(A.lo + int(A.dims.size()), B.lo + int(B.dims.size()));
    auto mp = [](const LineModule& X, int i) {
        int k = i - X.lo;
        if (k >= 0 && k < int(X.dims.size())) {
            if (k + 1 < int(X.dims.size())) return X.zmap[k];
            return Mat(0, X.dims[k]);
        }
        return Mat(X.dim(i + 1), 0);
    };
    LineModule S{A.F, lo, {}, {}};
    for (int i = lo; i < hi; ++i) {
        S.dims.push_back(A.dim(i) + B.dim(i));
        Mat m = block_diag(mp(A, i), mp(B, i));
        if (i + 1 == hi) m = Mat(0, S.dims.back());
        S.zmap.push_back(m);
    }
    return S;
}

int bar_count(const LineModule& A) {
    int s = A.total_dim();
    for (const Mat& m : A.zmap) s -= rank(A.F, m);
    return s;
}

LineModule slice(const GridModule& M, const SlicePath& l) {
    for (std::size_t i = 0; i + 1 < l.points.size(); ++i)
        if (!leq(l.points[i], l.points[i + 1]) || l.points[i] == l.points[i + 1])
            throw contract_error("slice path is not strictly increasing");
    for (auto p : l.points)
        if (!M.w.contains(p)) throw contract_error("slice point outside window");
    LineModule A{M.F, 0, {}, {}};
    for (std::size_t i = 0; i < l.points.size(); ++i) {
        A.dims.push_back(M.dim(l.points[i]));
        if (i + 1 < l.points.size()) {
            Bigrade a = l.points[i], b = l.points[i + 1];
            Mat m = M.map(a, b);
#ifndef NDEBUG
            // y-first composite must agree
            Mat alt = M.map({a.x, b.y}, b);
            alt = mul(M.F, alt, M.map(a, {a.x, b.y}));
            if (!(alt == m)) throw contract_error("slice composite is path dependent");
#endif
            A.zmap.push_back(m);
        } else {
            A.zmap.push_back(Mat(0, A.dims.back()));
        }
    }
    return A;
}

std::vector<Bar> barcode(const LineModule& A) {
    // Carry a basis of the image of each earlier index and peel off bars:
    // the multiplicity of [b,d) is r(b,d-1) - r(b,d) - r(b-1,d-1) + r(b-1,d),
    // where r(i,j) is the rank of the composite i -> j.
    int n = int(A.dims.size());
    auto r = [&](int i, int j) -> int {  // indices relative to lo, i <= j
        if (i < 0 || j >= n || i > j) return 0;
        Mat m = Mat::identity(A.dims[i]);
        for (int k = i; k < j; ++k) m = mul(A.F, A.zmap[k], m);
        return rank(A.F, m);
    };
    std::vector<Bar> bars;
    for (int b = 0; b < n; ++b)
        for (int d = b + 1; d <= n; ++d) {
            int mult = r(b, d - 1) - r(b, d) - r(b - 1, d - 1) + r(b - 1, d);
            for (int t = 0; t < mult; ++t) bars.push_back({A.lo + b, A.lo + d});
        }
    return bars;
}

}  // namespace bgm
