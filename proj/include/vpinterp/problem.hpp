#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/matrix.hpp"
#include "vpinterp/poly.hpp"

namespace vpinterp {

// One interpolation condition: sum_k alpha_k P_k(z) = 0.
template <Scalar S>
struct Node {
    S z;
    std::vector<S> alpha;
};

struct NormalizeReport {
    std::size_t collapsed = 0;              // redundant conditions dropped
    std::vector<std::size_t> crowded_input; // 0-based raw indices at z-points with > n conditions
    bool clean() const { return collapsed == 0 && crowded_input.empty(); }
};

// An interpolation problem, always held in normalized form: among conditions
// sharing a node point, only a maximal linearly independent set of
// coefficient vectors is kept (first occurrence wins). A dependent condition
// is implied by the kept ones, so the solution set is unchanged; this also
// caps the number of conditions per point at n. Immutable after
// construction.
template <Scalar S>
class Problem {
public:
    explicit Problem(std::size_t n) : n_(n) { require(n >= 1, "dimension must be >= 1"); }

    static Problem normalized(std::size_t n, std::vector<Node<S>> raw,
                              NormalizeReport* report = nullptr) {
        require(n >= 1, "dimension must be >= 1");
        NormalizeReport rep;
        // Echelonized span basis per distinct node point, aligned with kept.
        std::vector<S> group_z;
        std::vector<std::vector<std::vector<S>>> group_basis;
        std::vector<std::size_t> group_raw_count;
        std::vector<Node<S>> kept;
        kept.reserve(raw.size());
        std::vector<std::size_t> raw_group(raw.size());
        for (std::size_t j = 0; j < raw.size(); ++j) {
            Node<S>& node = raw[j];
            require(node.alpha.size() == n,
                    "node " + std::to_string(j + 1) + ": alpha has wrong dimension");
            bool all_zero = true;
            for (const S& a : node.alpha)
                if (!is_zero(a)) all_zero = false;
            require(!all_zero, "node " + std::to_string(j + 1) +
                                   ": coefficient vector is zero (sum |alpha_k| > 0 required)");
            std::size_t g = group_z.size();
            for (std::size_t t = 0; t < group_z.size(); ++t) {
                if (group_z[t] == node.z) {
                    g = t;
                    break;
                }
            }
            if (g == group_z.size()) {
                group_z.push_back(node.z);
                group_basis.emplace_back();
                group_raw_count.push_back(0);
            }
            raw_group[j] = g;
            ++group_raw_count[g];
            // Reduce alpha against the group's span basis.
            std::vector<S> residual = node.alpha;
            for (const std::vector<S>& b : group_basis[g]) {
                std::size_t pivot = 0;
                while (is_zero(b[pivot])) ++pivot;
                if (is_zero(residual[pivot])) continue;
                S f = residual[pivot] / b[pivot];
                for (std::size_t k = 0; k < n; ++k) residual[k] -= f * b[k];
            }
            bool independent = false;
            for (const S& v : residual)
                if (!is_zero(v)) independent = true;
            if (!independent) {
                ++rep.collapsed;
                continue;
            }
            group_basis[g].push_back(std::move(residual));
            kept.push_back(std::move(node));
        }
        for (std::size_t j = 0; j < raw.size(); ++j)
            if (group_raw_count[raw_group[j]] > n) rep.crowded_input.push_back(j);
        if (report) *report = rep;
        Problem p(n);
        p.nodes_ = std::move(kept);
        return p;
    }

    std::size_t n() const { return n_; }
    std::size_t node_count() const { return nodes_.size(); }
    const Node<S>& node(std::size_t j) const { return nodes_.at(j); }
    const std::vector<Node<S>>& nodes() const { return nodes_; }

private:
    std::size_t n_;
    std::vector<Node<S>> nodes_;
};

template <Scalar S>
Problem<S> normalize_problem(std::size_t n, std::vector<Node<S>> raw,
                             NormalizeReport* report = nullptr) {
    return Problem<S>::normalized(n, std::move(raw), report);
}

// sigma_{jk} = conj(alpha_j) alpha_k: Hermitian, rank one, nonnegative
// diagonal.
template <Scalar S>
Matrix<S> sigma_from_alpha(const std::vector<S>& alpha) {
    const std::size_t n = alpha.size();
    Matrix<S> sigma(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) sigma.at(j, k) = conj(alpha[j]) * alpha[k];
    return sigma;
}

// Recovers alpha from a Hermitian nonnegative rank-one matrix, canonicalized
// so the first nonzero entry is a positive rational. On the exact backend the
// leading diagonal entry must be a perfect rational square for the factor to
// live in Q(i); anything else is rejected.
template <Scalar S>
std::vector<S> alpha_from_sigma(const Matrix<S>& sigma) {
    require(sigma.rows() == sigma.cols(), "sigma must be square");
    const std::size_t n = sigma.rows();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            require(sigma.at(j, k) == conj(sigma.at(k, j)), "sigma is not Hermitian");
    std::size_t lead = n;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(sigma.at(j, j))) continue;
        lead = j;
        break;
    }
    std::vector<S> alpha(n, S{});
    if (lead == n) {
        // Zero diagonal: Hermitian rank <= 1 forces the whole matrix to zero.
        require(Matrix<S>(n, n) == sigma, "sigma has zero diagonal but nonzero entries");
        return alpha;
    }
    auto root = FieldTraits<S>::sqrt_nonneg(sigma.at(lead, lead));
    require(root.has_value(),
            "sigma diagonal entry " + std::to_string(lead + 1) +
                " is not a perfect square of the coefficient field (or is negative)");
    alpha[lead] = *root;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == lead) continue;
        alpha[k] = sigma.at(lead, k) / alpha[lead];
    }
    require(sigma_from_alpha(alpha) == sigma, "sigma is not rank one");
    return alpha;
}

// Exact test of sum_k alpha_k(j) P_k(z_j) = 0 at every node.
template <Scalar S>
bool check_solution(const VectorPoly<S>& p, const Problem<S>& prob) {
    require(p.n() == prob.n(), "dimension mismatch between polynomial and problem");
    for (const Node<S>& node : prob.nodes()) {
        S acc{};
        for (std::size_t k = 0; k < prob.n(); ++k)
            acc += node.alpha[k] * p.entry(k).evaluate(node.z);
        if (!is_zero(acc)) return false;
    }
    return true;
}

// N x (cap+1) linearization of the node conditions over the graded basis:
// the column for e_{nk+i} holds alpha_i(j) z_j^k, so p with h(p) <= cap is a
// solution exactly when its expansion vector lies in the kernel.
template <Scalar S>
Matrix<S> constraint_matrix(const Problem<S>& prob, int cap) {
    require(cap >= 0, "height cap must be nonnegative");
    const std::size_t n = prob.n();
    const std::size_t cols = static_cast<std::size_t>(cap) + 1;
    Matrix<S> c(prob.node_count(), cols);
    for (std::size_t j = 0; j < prob.node_count(); ++j) {
        const Node<S>& node = prob.node(j);
        S zpow{1L};
        for (std::size_t m = 0; m < cols; ++m) {
            if (m > 0 && m % n == 0) zpow = zpow * node.z;
            c.at(j, m) = node.alpha[m % n] * zpow;
        }
    }
    return c;
}

} // namespace vpinterp
