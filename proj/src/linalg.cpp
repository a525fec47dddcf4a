#include "bgm/linalg.hpp"

#include <sstream>

namespace bgm {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(elem prime) : p(prime) {
    if (!is_prime(prime)) throw contract_error("field modulus " + std::to_string(prime) + " is not prime");
    if (prime >= (1u << 31)) throw contract_error("field modulus too large");
}

elem Field::pow(elem a, std::uint64_t e) const {
    elem r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

elem Field::inv(elem a) const {
    if (a == 0) throw contract_error("inverse of zero");
    return pow(a, p - 2);
}

elem Field::from_int(long long v) const {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return elem(r);
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (elem v : a)
        if (v) return false;
    return true;
}

Mat Mat::col(int j) const { return cols_of({j}); }

Mat Mat::cols_of(const std::vector<int>& idx) const {
    Mat m(rows, int(idx.size()));
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < m.cols; ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
}

Mat Mat::rows_of(const std::vector<int>& idx) const {
    Mat m(int(idx.size()), cols);
    for (int k = 0; k < m.rows; ++k)
        for (int j = 0; j < cols; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat mul(const Field& F, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw contract_error("mul: shape mismatch");
    Mat C(A.rows, B.cols);
    // accumulate in 64 bits and reduce lazily; p < 2^31 so p^2 < 2^62
    const std::uint64_t lim = ~std::uint64_t(0) - std::uint64_t(F.p - 1) * (F.p - 1);
    std::vector<std::uint64_t> acc(B.cols);
    for (int i = 0; i < A.rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < A.cols; ++k) {
            std::uint64_t aik = A(i, k);
            if (!aik) continue;
            const elem* brow = &B.a[std::size_t(k) * B.cols];
            for (int j = 0; j < B.cols; ++j) {
                acc[j] += aik * brow[j];
                if (acc[j] >= lim) acc[j] %= F.p;
            }
        }
        for (int j = 0; j < B.cols; ++j) C(i, j) = elem(acc[j] % F.p);
    }
    return C;
}

Mat add(const Field& F, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw contract_error("add: shape mismatch");
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

Mat sub(const Field& F, const Mat& A, const Mat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw contract_error("sub: shape mismatch");
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

Mat scale(const Field& F, elem s, const Mat& A) {
    Mat C = A;
    for (auto& v : C.a) v = F.mul(v, s);
    return C;
}

Mat hcat(const Mat& A, const Mat& B) {
    if (A.rows != B.rows) throw contract_error("hcat: row mismatch");
    Mat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
        for (int j = 0; j < B.cols; ++j) C(i, A.cols + j) = B(i, j);
    }
    return C;
}

Mat vcat(const Mat& A, const Mat& B) {
    if (A.cols != B.cols) throw contract_error("vcat: column mismatch");
    Mat C(A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

Mat block_diag(const Mat& A, const Mat& B) {
    Mat C(A.rows + B.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C(A.rows + i, A.cols + j) = B(i, j);
    return C;
}

Echelon rref(const Field& F, Mat m) {
    Echelon e;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
        elem iv = F.inv(m(row, c));
        for (int j = c; j < m.cols; ++j) m(row, j) = F.mul(m(row, j), iv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            elem f = m(i, c);
            if (!f) continue;
            elem nf = F.neg(f);
            elem* ri = &m.a[std::size_t(i) * m.cols];
            const elem* rr = &m.a[std::size_t(row) * m.cols];
            for (int j = c; j < m.cols; ++j)
                if (rr[j]) ri[j] = F.add(ri[j], F.mul(nf, rr[j]));
        }
        e.pivots.push_back(c);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

int rank(const Field& F, const Mat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return int(rref(F, m).pivots.size());
}

Mat kernel_basis(const Field& F, const Mat& m) {
    Echelon e = rref(F, m);
    std::vector<char> is_piv(m.cols, 0);
    for (int c : e.pivots) is_piv[c] = 1;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    Mat K(m.cols, int(free.size()));
    for (int k = 0; k < int(free.size()); ++k) {
        int fc = free[k];
        K(fc, k) = 1;
        for (int r = 0; r < int(e.pivots.size()); ++r) K(e.pivots[r], k) = F.neg(e.r(r, fc));
    }
    return K;
}

std::optional<Mat> solve_membership(const Field& F, const Mat& span, const Mat& target) {
    if (span.rows != target.rows) throw contract_error("solve_membership: row count mismatch");
    Echelon e = rref(F, hcat(span, target));
    Mat X(span.cols, target.cols);
    for (int r = 0; r < int(e.pivots.size()); ++r) {
        int c = e.pivots[r];
        if (c >= span.cols) return std::nullopt;
        for (int j = 0; j < target.cols; ++j) X(c, j) = e.r(r, span.cols + j);
    }
    return X;
}

Mat column_basis(const Field& F, const Mat& m) {
    if (m.cols == 0) return Mat(m.rows, 0);
    return m.cols_of(rref(F, m).pivots);
}

std::optional<Mat> inverse(const Field& F, const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto X = solve_membership(F, m, Mat::identity(m.rows));
    if (!X || rank(F, m) != m.rows) return std::nullopt;
    return X;
}

Mat mat_pow(const Field& F, const Mat& m, std::uint64_t e) {
    Mat r = Mat::identity(m.rows), b = m;
    while (e) {
        if (e & 1) r = mul(F, r, b);
        e >>= 1;
        if (e) b = mul(F, b, b);
    }
    return r;
}

Quotient quotient(const Field& F, const Mat& U, int n) {
    if (U.rows != n) throw contract_error("quotient: ambient mismatch");
    Echelon e = rref(F, U.transpose());
    std::vector<char> is_piv(n, 0);
    for (int c : e.pivots) is_piv[c] = 1;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!is_piv[i]) keep.push_back(i);
    Quotient q{Mat(int(keep.size()), n), Mat(n, int(keep.size()))};
    for (int t = 0; t < int(keep.size()); ++t) {
        int i = keep[t];
        q.proj(t, i) = 1;
        q.lift(i, t) = 1;
        for (int k = 0; k < int(e.pivots.size()); ++k) q.proj(t, e.pivots[k]) = F.neg(e.r(k, i));
    }
    return q;
}

Mat intersect(const Field& F, const Mat& U, const Mat& W) {
    if (U.cols == 0 || W.cols == 0) return Mat(U.rows, 0);
    Mat K = kernel_basis(F, hcat(U, scale(F, F.neg(1), W)));
    std::vector<int> top(U.cols);
    for (int i = 0; i < U.cols; ++i) top[i] = i;
    return column_basis(F, mul(F, U, K.rows_of(top)));
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
    }
    os << "]";
    return os.str();
}

}  // namespace bgm
