#include "linalg.hpp"

namespace qvc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("Mat: dimension mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("Mat: dimension mismatch in sum");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("Mat: dimension mismatch in difference");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void Mat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::runtime_error("Mat: hcat row mismatch");
    Mat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::runtime_error("Mat: vcat column mismatch");
    Mat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        m.swap_rows(row, p);
        Rat inv = 1 / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Rat f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return int(rref(m).size()); }

Mat kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.cols(), int(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k.at(fc, int(f)) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], int(f)) = -r.at(int(pi), fc);
    }
    return k;
}

int column_rank(const Mat& m) { return rank(m); }

Mat solve_exact(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::runtime_error("solve_exact: row mismatch");
    Mat aug = Mat::hcat(a, b);
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p >= a.cols()) throw std::runtime_error("solve_exact: inconsistent system");
    Mat x(a.cols(), b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[pi], j) = aug.at(int(pi), a.cols() + j);
    return x;
}

// IMat ------------------------------------------------------------------------

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw std::runtime_error("IMat: dimension mismatch in product");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IMat IMat::operator+(const IMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::runtime_error("IMat: dimension mismatch in sum");
    IMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

IMat IMat::transposed() const {
    IMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat IMat::to_rational() const {
    Mat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = Rat(at(i, j));
    return r;
}

namespace {

void swap_irows(IMat& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

// Row HNF on m; if U is non-null it receives the unimodular transform rows
// (U starts as identity and follows every row operation), and zero rows are
// kept in place so callers can match them against U. Returns the row rank.
int hnf_rows_tracked(IMat& m, IMat* U) {
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Clear column below `row` by gcd cascading.
        while (true) {
            int best = -1;
            for (int i = row; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                if (best < 0 || mpz_cmpabs(m.at(i, col).get_mpz_t(), m.at(best, col).get_mpz_t()) < 0) best = i;
            }
            if (best < 0) break;
            swap_irows(m, row, best);
            if (U) swap_irows(*U, row, best);
            bool cleared = true;
            for (int i = row + 1; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(row, col).get_mpz_t());
                if (q != 0) {
                    for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(row, j);
                    if (U)
                        for (int j = 0; j < U->cols(); ++j) U->at(i, j) -= q * U->at(row, j);
                }
                if (m.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0) {
            for (int j = 0; j < m.cols(); ++j) m.at(row, j) = -m.at(row, j);
            if (U)
                for (int j = 0; j < U->cols(); ++j) U->at(row, j) = -U->at(row, j);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, col).get_mpz_t(), m.at(row, col).get_mpz_t());
            if (q == 0) continue;
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(row, j);
            if (U)
                for (int j = 0; j < U->cols(); ++j) U->at(i, j) -= q * U->at(row, j);
        }
        ++row;
    }
    return row;
}

}  // namespace

IMat hnf_rows(IMat m) {
    int r = hnf_rows_tracked(m, nullptr);
    IMat out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

IMat integer_kernel(const IMat& m) {
    IMat t = m.transposed();  // rows indexed by the ambient coordinates
    IMat U = IMat::identity(t.rows());
    int r = hnf_rows_tracked(t, &U);
    IMat ker(t.rows() - r, m.cols());
    for (int i = r; i < t.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) ker.at(i - r, j) = U.at(i, j);
    return hnf_rows(ker);
}

Int det_bareiss(IMat m) {
    if (m.rows() != m.cols()) throw std::runtime_error("det_bareiss: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            swap_irows(m, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int irank(const IMat& m) { return hnf_rows(m).rows(); }

}  // namespace qvc
