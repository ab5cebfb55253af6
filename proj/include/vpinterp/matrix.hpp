#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/field.hpp"

namespace vpinterp {

// Dense row-major matrix over a scalar backend.
template <Scalar S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, S{}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S{1L};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> a_;
};

template <Scalar S>
using SquareMatrix = Matrix<S>;

// beta^t = alpha^t A (row vector times matrix).
template <Scalar S>
std::vector<S> row_times_matrix(const std::vector<S>& alpha, const Matrix<S>& a) {
    require(alpha.size() == a.rows(), "row/matrix dimension mismatch");
    std::vector<S> out(a.cols(), S{});
    for (std::size_t c = 0; c < a.cols(); ++c) {
        S acc{};
        for (std::size_t r = 0; r < a.rows(); ++r) acc += alpha[r] * a.at(r, c);
        out[c] = acc;
    }
    return out;
}

template <Scalar S>
std::vector<S> matrix_times_column(const Matrix<S>& a, const std::vector<S>& x) {
    require(x.size() == a.cols(), "matrix/column dimension mismatch");
    std::vector<S> out(a.rows(), S{});
    for (std::size_t r = 0; r < a.rows(); ++r) {
        S acc{};
        for (std::size_t c = 0; c < a.cols(); ++c) acc += a.at(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

// Determinant by plain elimination with row swaps.
template <Scalar S>
S determinant(Matrix<S> a) {
    require(a.rows() == a.cols(), "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    S det{1L};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        double best = FieldTraits<S>::pivot_weight(a.at(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            double w = FieldTraits<S>::pivot_weight(a.at(r, c));
            if (w > best) {
                best = w;
                piv = r;
            }
        }
        if (is_zero(a.at(piv, c))) return S{};
        if (piv != c) {
            a.swap_rows(piv, c);
            det = -det;
        }
        det = det * a.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a.at(r, c))) continue;
            S f = a.at(r, c) / a.at(c, c);
            for (std::size_t k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
        }
    }
    return det;
}

} // namespace vpinterp
