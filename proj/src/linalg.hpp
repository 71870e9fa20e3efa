#ifndef QUIVERCERT_LINALG_HPP
#define QUIVERCERT_LINALG_HPP

// Exact dense linear algebra: rational matrices (Gauss-Jordan to reduced row
// echelon form, canonical kernel bases) and integer matrices (Hermite normal
// form, saturated kernel lattices, fraction-free Bareiss determinants).
// Everything is deterministic: the same input always yields the same basis.

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvc {

using Rat = mpq_class;
using Int = mpz_class;

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transposed() const;

    void swap_rows(int i, int j);

    // Horizontal / vertical concatenation.
    static Mat hcat(const Mat& a, const Mat& b);
    static Mat vcat(const Mat& a, const Mat& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Canonical basis of {x : m x = 0}: one vector per free column, unit entry at
// the free coordinate, ordered by free column index. Returned as matrix columns.
Mat kernel_basis(const Mat& m);

// Column span test and canonical column-space operations.
int column_rank(const Mat& m);

// Solve a X = b exactly (all columns); throws std::runtime_error if inconsistent.
Mat solve_exact(const Mat& a, const Mat& b);

// Integer matrices -----------------------------------------------------------

class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}

    static IMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    IMat operator*(const IMat& o) const;
    IMat operator+(const IMat& o) const;
    IMat transposed() const;

    Mat to_rational() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Canonical row Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows dropped.
IMat hnf_rows(IMat m);

// Basis of the saturated lattice {v in Z^n : m v^T = 0}, rows in canonical HNF.
// Computed by a unimodular row transform of the transpose, so the result spans
// the full integer kernel (not merely a finite-index sublattice).
IMat integer_kernel(const IMat& m);

// Fraction-free determinant (Bareiss elimination).
Int det_bareiss(IMat m);

int irank(const IMat& m);

}  // namespace qvc

#endif
