#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/matrix.hpp"

namespace vpinterp {

// Row updates during elimination are independent, so they are fanned out
// with OpenMP once the matrix is big enough to pay for it. Results are
// identical to the serial order for every thread count: each row's
// arithmetic is self-contained. The cutoff is sized for exact entries,
// whose per-element cost dwarfs the scheduling overhead; constraint systems
// at desk scale stay below it and run serially.
inline constexpr std::size_t kParallelEliminationThreshold = 2048;

template <Scalar S>
struct EchelonResult {
    Matrix<S> rref;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

namespace detail {

template <Scalar S>
double zero_scale(const Matrix<S>& a) {
    if constexpr (FieldTraits<S>::is_exact) {
        return 1.0;
    } else {
        double best = 1.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                best = std::max(best, FieldTraits<S>::pivot_weight(a.at(r, c)));
        return best;
    }
}

} // namespace detail

// Reduced row echelon form with leftmost pivot columns, unit pivots, and
// zeros above and below each pivot. Pivot rows are chosen by the backend's
// pivot weight (first nonzero on the exact backend, largest magnitude on the
// floating one), which keeps the result deterministic.
template <Scalar S>
EchelonResult<S> reduced_row_echelon(Matrix<S> a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const double scale = detail::zero_scale(a);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best_row = rows;
        double best_w = 0.0;
        for (std::size_t i = r; i < rows; ++i) {
            if (FieldTraits<S>::is_zero_scaled(a.at(i, c), scale)) continue;
            double w = FieldTraits<S>::pivot_weight(a.at(i, c));
            if (best_row == rows || w > best_w) {
                best_row = i;
                best_w = w;
            }
        }
        if (best_row == rows) continue;
        a.swap_rows(r, best_row);
        const long nrows = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic) if (rows * cols > kParallelEliminationThreshold)
        for (long i = static_cast<long>(r) + 1; i < nrows; ++i) {
            auto row = static_cast<std::size_t>(i);
            if (FieldTraits<S>::is_zero_scaled(a.at(row, c), scale)) continue;
            S f = a.at(row, c) / a.at(r, c);
            a.at(row, c) = S{};
            for (std::size_t k = c + 1; k < cols; ++k) a.at(row, k) -= f * a.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    // Back substitution: normalize pivots and clear the entries above them.
    for (std::size_t pi = pivots.size(); pi-- > 0;) {
        const std::size_t prow = pi;
        const std::size_t pcol = pivots[pi];
        S inv = S{1L} / a.at(prow, pcol);
        a.at(prow, pcol) = S{1L};
        const long ncols = static_cast<long>(cols);
#pragma omp parallel for schedule(dynamic) if (cols - pcol > 64)
        for (long k = static_cast<long>(pcol) + 1; k < ncols; ++k)
            a.at(prow, static_cast<std::size_t>(k)) =
                a.at(prow, static_cast<std::size_t>(k)) * inv;
        const long nabove = static_cast<long>(prow);
#pragma omp parallel for schedule(dynamic) if (prow * cols > kParallelEliminationThreshold)
        for (long i = 0; i < nabove; ++i) {
            auto row = static_cast<std::size_t>(i);
            if (FieldTraits<S>::is_zero_scaled(a.at(row, pcol), scale)) continue;
            S f = a.at(row, pcol);
            a.at(row, pcol) = S{};
            for (std::size_t k = pcol + 1; k < cols; ++k) a.at(row, k) -= f * a.at(prow, k);
        }
    }
    return {std::move(a), std::move(pivots)};
}

// Kernel basis of the constraint matrix in graded-canonical form: one vector
// per free column f, with a unit coefficient at f (its pivot and highest
// nonzero coordinate, so the vector has height f), zeros at every other free
// column, and the solved values at the constraint pivot columns.
template <Scalar S>
struct KernelBasis {
    int cap = 0;                          // height cap M; vectors have cap+1 coordinates
    std::vector<int> pivots;              // 0-based pivot coordinate (= height), ascending
    std::vector<std::vector<S>> vectors;
    std::size_t dim() const { return vectors.size(); }
};

template <Scalar S>
KernelBasis<S> kernel_graded(const Matrix<S>& constraints) {
    require(constraints.cols() >= 1, "constraint matrix needs at least one column");
    EchelonResult<S> ech = reduced_row_echelon(constraints);
    const std::size_t cols = constraints.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    KernelBasis<S> basis;
    basis.cap = static_cast<int>(cols) - 1;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(cols, S{});
        v[f] = S{1L};
        for (std::size_t pi = 0; pi < ech.pivot_cols.size(); ++pi) {
            std::size_t pcol = ech.pivot_cols[pi];
            if (pcol > f) break;
            v[pcol] = -ech.rref.at(pi, f);
        }
        basis.pivots.push_back(static_cast<int>(f));
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

} // namespace vpinterp
