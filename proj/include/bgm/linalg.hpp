#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgm {

using elem = std::uint32_t;

struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Prime field F_p. Elements are kept reduced in [0, p).
struct Field {
    elem p = 2;

    Field() = default;
    explicit Field(elem prime);

    elem add(elem a, elem b) const { elem s = a + b; return s >= p ? s - p : s; }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem mul(elem a, elem b) const { return elem((std::uint64_t(a) * b) % p); }
    elem inv(elem a) const;
    elem pow(elem a, std::uint64_t e) const;
    elem from_int(long long v) const;
    // symmetric representative in (-p/2, p/2]
    long long to_signed(elem a) const { return a > p / 2 ? (long long)a - p : (long long)a; }

    bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime(std::uint64_t n);

struct Mat {
    int rows = 0, cols = 0;
    std::vector<elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    elem& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    elem operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat col(int j) const;
    Mat cols_of(const std::vector<int>& idx) const;
    Mat rows_of(const std::vector<int>& idx) const;
    Mat transpose() const;
};

Mat mul(const Field& F, const Mat& A, const Mat& B);
Mat add(const Field& F, const Mat& A, const Mat& B);
Mat sub(const Field& F, const Mat& A, const Mat& B);
Mat scale(const Field& F, elem s, const Mat& A);
Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat block_diag(const Mat& A, const Mat& B);

// Reduced row echelon form; pivots[k] is the pivot column of row k.
struct Echelon {
    Mat r;
    std::vector<int> pivots;
};
Echelon rref(const Field& F, Mat m);

int rank(const Field& F, const Mat& m);
Mat kernel_basis(const Field& F, const Mat& m);
std::optional<Mat> solve_membership(const Field& F, const Mat& span, const Mat& target);

// Columns of m forming a basis of its column space (a subset of the original
// columns, chosen greedily left to right).
Mat column_basis(const Field& F, const Mat& m);
std::optional<Mat> inverse(const Field& F, const Mat& m);
Mat mat_pow(const Field& F, const Mat& m, std::uint64_t e);

// Coordinates on V / U for a subspace U of V = F^n given by spanning columns.
// proj: (n - r) x n, lift: n x (n - r), proj * lift = I, proj * U = 0.
struct Quotient {
    Mat proj, lift;
    int dim() const { return proj.rows; }
};
Quotient quotient(const Field& F, const Mat& U, int n);

// Basis of U ∩ W for column spans U, W in the same ambient space.
Mat intersect(const Field& F, const Mat& U, const Mat& W);

std::string to_string(const Mat& m);

}  // namespace bgm
