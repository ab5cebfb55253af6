#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/matrix.hpp"
#include "vpinterp/poly.hpp"

namespace vpinterp {

// Componentwise linear action of an n x n matrix on a vector polynomial.
// Height laws: h(Ap) <= h(p) + n - 1 always; h(Ap) <= h(p) for upper
// triangular A; and lower triangular A cannot push the height past the next
// multiple-of-n boundary.
template <Scalar S>
VectorPoly<S> apply_matrix(const Matrix<S>& a, const VectorPoly<S>& p) {
    require(a.rows() == a.cols() && a.rows() == p.n(), "matrix/vector dimension mismatch");
    VectorPoly<S> r(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
        ScalarPoly<S> acc;
        for (std::size_t k = 0; k < p.n(); ++k) {
            if (is_zero(a.at(i, k)) || p.entry(k).is_zero()) continue;
            acc += p.entry(k).scaled(a.at(i, k));
        }
        r.set_entry(i, std::move(acc));
    }
    return r;
}

// Identity matrix except for one full row.
template <Scalar S>
struct PivotRowMatrix {
    Matrix<S> base;
    std::size_t pivot; // 0-based row index of the non-identity row
};

// The row matrix A with alpha^t A = e_pivot^t: row `pivot` holds
// -alpha_k/alpha_pivot off the diagonal and 1/alpha_pivot on it. Conjugating
// the rank-one matrix of alpha by A therefore leaves a single unit diagonal
// entry at the pivot.
template <Scalar S>
PivotRowMatrix<S> build_pivot_matrix(const std::vector<S>& alpha, std::size_t pivot) {
    const std::size_t n = alpha.size();
    require(pivot < n, "pivot index out of range");
    require(!is_zero(alpha[pivot]), "pivot entry of alpha is zero");
    Matrix<S> a = Matrix<S>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == pivot)
            a.at(pivot, k) = S{1L} / alpha[pivot];
        else
            a.at(pivot, k) = -(alpha[k] / alpha[pivot]);
    }
    return {std::move(a), pivot};
}

// Multiplies component l (0-based) by s and leaves the rest untouched: the
// diagonal substitution matrix T_{l+1}(s).
template <Scalar S>
VectorPoly<S> apply_T(std::size_t l, const ScalarPoly<S>& s, const VectorPoly<S>& p) {
    require(l < p.n(), "component index out of range");
    VectorPoly<S> r = p;
    r.set_entry(l, s * p.entry(l));
    return r;
}

// Applies a pivot-row matrix whose pivot lies strictly inside {2,..,n-1}
// (1-based) under the hypothesis h(p) <= bound with bound = nk + pivot - 1;
// the height law guarantees the bound survives, and a violation signals a
// bug rather than bad input.
template <Scalar S>
VectorPoly<S> apply_pivot_height_check(const PivotRowMatrix<S>& a, const VectorPoly<S>& p,
                                       int bound) {
    const std::size_t n = p.n();
    require(n >= 3, "pivot height law needs n >= 3");
    require(a.pivot >= 1 && a.pivot + 1 < n, "pivot must be strictly interior");
    require(bound >= 0 && static_cast<std::size_t>(bound % static_cast<int>(n)) == a.pivot,
            "bound must have the form nk + pivot - 1 (1-based pivot)");
    require(height(p) <= Height::of(bound), "input height exceeds the stated bound");
    VectorPoly<S> r = apply_matrix(a.base, p);
    invariant(height(r) <= Height::of(bound),
              "pivot-row height law violated (bound " + std::to_string(bound) + ")");
    return r;
}

} // namespace vpinterp
