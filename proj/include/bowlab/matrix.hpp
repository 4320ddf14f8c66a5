#pragma once

#include "bowlab/errors.hpp"
#include "bowlab/laurent.hpp"
#include "bowlab/polynomial.hpp"
#include "bowlab/rational.hpp"

#include <vector>

namespace bowlab {

template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return rat(0); }
    static Rational one() { return rat(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct RingTraits<Polynomial> {
    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial::one(); }
    static bool is_zero(const Polynomial& p) { return p.is_zero(); }
};

template <>
struct RingTraits<TruncatedLaurent> {
    static TruncatedLaurent zero() { return TruncatedLaurent(); }
    static TruncatedLaurent one() { return TruncatedLaurent::monomial(rat(1), 0); }
    static bool is_zero(const TruncatedLaurent& t) { return t.is_exact_zero(); }
};

// Dense matrix over an exact coefficient ring. Indices are 0-based in code;
// user-facing reports translate to the 1-based convention.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                RingTraits<T>::zero()) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = RingTraits<T>::one();
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const T& at(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            r.data_[k] = r.data_[k] + o.data_[k];
        }
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            r.data_[k] = r.data_[k] - o.data_[k];
        }
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) {
            throw SingularError("matrix product shape mismatch");
        }
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (RingTraits<T>::is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
                }
            }
        }
        return r;
    }

    Mat operator*(const T& s) const {
        Mat r = *this;
        for (auto& v : r.data_) {
            v = v * s;
        }
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                r.at(j, i) = at(i, j);
            }
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_) {
            if (!RingTraits<T>::is_zero(v)) return false;
        }
        return true;
    }

    // Rows/cols are selected by 0-based index lists (kept in the given order).
    Mat submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        Mat r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i) {
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                r.at(static_cast<int>(i), static_cast<int>(j)) =
                    at(row_idx[i], col_idx[j]);
            }
        }
        return r;
    }

    // Contiguous block of the given size with top-left corner (i0, j0).
    Mat block(int i0, int j0, int nrows, int ncols) const {
        Mat r(nrows, ncols);
        for (int i = 0; i < nrows; ++i) {
            for (int j = 0; j < ncols; ++j) {
                r.at(i, j) = at(i0 + i, j0 + j);
            }
        }
        return r;
    }

    void set_block(int i0, int j0, const Mat& b) {
        for (int i = 0; i < b.rows(); ++i) {
            for (int j = 0; j < b.cols(); ++j) {
                at(i0 + i, j0 + j) = b.at(i, j);
            }
        }
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw SingularError("matrix shape mismatch");
        }
    }

    int rows_;
    int cols_;
    std::vector<T> data_;
};

using RatMat = Mat<Rational>;
using PolyMat = Mat<Polynomial>;
using LaurentMat = Mat<TruncatedLaurent>;

// Exact inverse by Gauss-Jordan elimination; SingularError if not invertible.
RatMat rat_inverse(const RatMat& m);

// Determinant over the rationals (Gaussian elimination).
Rational rat_det(const RatMat& m);

PolyMat to_poly_mat(const RatMat& m);
LaurentMat to_laurent_mat(const PolyMat& m);

// x*I - B over the polynomial ring.
PolyMat char_matrix(const RatMat& b);

// Determinant over Q[x] (fraction-free Bareiss elimination with exact
// polynomial division).
Polynomial poly_det(const PolyMat& m);

// Determinant of the submatrix picked by 0-based row/col index lists.
Polynomial poly_minor(const PolyMat& m, const std::vector<int>& row_idx,
                      const std::vector<int>& col_idx);

// Adjugate via cofactors: adj(m) * m = det(m) * I.
PolyMat poly_adjugate(const PolyMat& m);

// The full chain d_1 | d_2 | ... | d_n of monic invariant factors (trivial
// factors 1 included), computed by Smith-style diagonalization over Q[x].
// SingularError when det = 0. The product of the returned factors equals the
// monic normalization of the determinant (verified internally).
std::vector<Polynomial> invariant_factors(const PolyMat& m);

// Companion matrix of a monic polynomial p of degree d: subdiagonal ones,
// last column carrying -p_0, ..., -p_{d-1}; the 0x0 matrix for d = 0.
RatMat companion(const Polynomial& p);

} // namespace bowlab
