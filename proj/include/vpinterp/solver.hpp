#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/kernel.hpp"
#include "vpinterp/problem.hpp"
#include "vpinterp/transforms.hpp"

namespace vpinterp {

// Candidate decomposition failure: certifies that the input was not a
// solution of the problem the generators came from.
class NotInModuleError : public ValidationError {
public:
    explicit NotInModuleError(const std::string& what) : ValidationError(what) {}
};

// The n generators of the solution module, sorted by ascending height.
// Their heights occupy all residue classes mod n and sum to
// N*n + n*(n-1)/2.
template <Scalar S>
struct GeneratorSet {
    std::size_t n = 0;
    std::size_t node_count = 0; // N after normalization
    std::vector<VectorPoly<S>> generators;
    std::vector<int> heights;

    long long height_sum() const {
        long long s = 0;
        for (int h : heights) s += h;
        return s;
    }
};

// Height cap that is guaranteed to expose every generator: the height-sum
// identity bounds each individual generator height by this value.
inline int module_cap(std::size_t n, std::size_t node_count) {
    return static_cast<int>(node_count * n + n * (n - 1) / 2);
}

// Computes the generators from the graded kernel at the module cap: the
// kernel vector heights are exactly the heights (<= cap) at which solutions
// exist, every element of the module spanned by already-chosen generators
// has a height in an already-chosen residue class, and so the lowest unseen
// residue-class representative is the next generator.
template <Scalar S>
GeneratorSet<S> generators(const Problem<S>& prob) {
    const std::size_t n = prob.n();
    const int cap = module_cap(n, prob.node_count());
    KernelBasis<S> basis = kernel_graded(constraint_matrix(prob, cap));
    GeneratorSet<S> out;
    out.n = n;
    out.node_count = prob.node_count();
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < basis.vectors.size(); ++v) {
        std::size_t residue = static_cast<std::size_t>(basis.pivots[v]) % n;
        if (seen[residue]) continue;
        seen[residue] = true;
        out.generators.push_back(rebuild(n, basis.vectors[v]));
        out.heights.push_back(basis.pivots[v]);
        if (out.generators.size() == n) break;
    }
    invariant(out.generators.size() == n,
              "kernel at the module cap does not cover all residue classes");
    return out;
}

namespace detail {

// One step of the constructive recursion: eliminate the last node with a
// nonzero pivot coefficient, transform the remaining coefficient vectors,
// and lift the sub-solution back. Node count drops by one per step, and the
// height grows by at most one, which yields h(result) <= N.
template <Scalar S>
VectorPoly<S> constructive_impl(std::size_t n, std::vector<Node<S>> nodes) {
    if (nodes.empty()) return basis_element<S>(1, n);
    if (nodes.size() == 1) {
        const Node<S>& node = nodes.front();
        if (n == 1) {
            // Single condition alpha_1 P_1(z_1) = 0 with alpha_1 != 0.
            return VectorPoly<S>(1, {ScalarPoly<S>({-node.z, S{1L}})});
        }
        VectorPoly<S> p(n);
        if (is_zero(node.alpha[0]) && is_zero(node.alpha[1])) {
            p.set_entry(0, ScalarPoly<S>::one());
            p.set_entry(1, ScalarPoly<S>::one());
        } else {
            p.set_entry(0, ScalarPoly<S>::constant(node.alpha[1]));
            p.set_entry(1, ScalarPoly<S>::constant(-node.alpha[0]));
        }
        return p;
    }

    const std::size_t remaining = nodes.size() - 1;
    const std::size_t l = remaining % n;
    const std::size_t pivot = (l + 1) % n;

    std::size_t eliminated = nodes.size();
    for (std::size_t j = nodes.size(); j-- > 0;) {
        if (!is_zero(nodes[j].alpha[pivot])) {
            eliminated = j;
            break;
        }
    }
    if (eliminated == nodes.size()) {
        // The pivot coefficient vanishes at every node, so the matching basis
        // element already solves the whole problem.
        return basis_element<S>(pivot + 1, n);
    }

    Node<S> last = std::move(nodes[eliminated]);
    nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(eliminated));
    PivotRowMatrix<S> a = build_pivot_matrix(last.alpha, pivot);

    std::vector<Node<S>> sub;
    sub.reserve(nodes.size());
    for (const Node<S>& node : nodes) {
        std::vector<S> gamma = row_times_matrix(node.alpha, a.base);
        gamma[pivot] = (last.z - node.z) * gamma[pivot];
        sub.push_back(Node<S>{node.z, std::move(gamma)});
    }
    // Transformed coefficient vectors at coinciding nodes can become
    // proportional; collapsing them only shrinks the sub-problem.
    Problem<S> subproblem = Problem<S>::normalized(n, std::move(sub));

    VectorPoly<S> q = constructive_impl(n, subproblem.nodes());
    ScalarPoly<S> shift({last.z, S{-1L}}); // z_last - z
    return apply_matrix(a.base, apply_T(pivot, shift, q));
}

} // namespace detail

// The constructive bounded-height solution: h(result) <= N, verified
// against the node conditions before returning.
template <Scalar S>
VectorPoly<S> constructive_solution(const Problem<S>& prob) {
    VectorPoly<S> r = detail::constructive_impl(prob.n(), prob.nodes());
    invariant(check_solution(r, prob), "constructive solution fails a node condition");
    invariant(!r.is_zero(), "constructive solution degenerated to zero");
    invariant(height(r) <= Height::of(static_cast<int>(prob.node_count())),
              "constructive solution exceeds the height bound N");
    return r;
}

// A solution of exact height m for any m >= N*n: a single component carrying
// z^k * prod_j (z - z_j).
template <Scalar S>
VectorPoly<S> existence_solution(const Problem<S>& prob, int m) {
    const std::size_t n = prob.n();
    const long long floor_height = static_cast<long long>(prob.node_count()) * static_cast<long long>(n);
    require(m >= floor_height,
            "existence construction needs m >= N*n = " + std::to_string(floor_height));
    const int excess = m - static_cast<int>(floor_height);
    const int k = excess / static_cast<int>(n);
    const std::size_t l = static_cast<std::size_t>(excess) % n;
    ScalarPoly<S> poly = ScalarPoly<S>::monomial(S{1L}, k);
    for (const Node<S>& node : prob.nodes()) poly = poly * ScalarPoly<S>({-node.z, S{1L}});
    VectorPoly<S> p(n);
    p.set_entry(l, std::move(poly));
    invariant(height(p) == Height::of(m), "existence construction has the wrong height");
    return p;
}

// Graded reduction of p over the generators: the unique residue-matching
// generator strips the leading expansion coefficient at every step, so the
// height strictly decreases until p is exhausted. Getting stuck certifies
// that p was not in the module.
template <Scalar S>
std::vector<ScalarPoly<S>> decompose(const VectorPoly<S>& p, const GeneratorSet<S>& gens) {
    require(p.n() == gens.n, "dimension mismatch between polynomial and generators");
    std::vector<ScalarPoly<S>> coeffs(gens.n);
    VectorPoly<S> q = p;
    while (!q.is_zero()) {
        const int m = height(q).value();
        std::size_t j = gens.n;
        for (std::size_t g = 0; g < gens.n; ++g) {
            if (gens.heights[g] % static_cast<int>(gens.n) == m % static_cast<int>(gens.n)) {
                j = g;
                break;
            }
        }
        invariant(j < gens.n, "generator residue classes do not cover Z/nZ");
        if (gens.heights[j] > m)
            throw NotInModuleError("no generator reaches height " + std::to_string(m) +
                                   ": input is not a solution of the generating problem");
        const int k = (m - gens.heights[j]) / static_cast<int>(gens.n);
        S c = leading_expansion_coefficient(q) / leading_expansion_coefficient(gens.generators[j]);
        q -= scalar_mul(ScalarPoly<S>::monomial(c, k), gens.generators[j]);
        invariant(height(q) < Height::of(m), "graded reduction failed to lower the height");
        coeffs[j] += ScalarPoly<S>::monomial(std::move(c), k);
    }
    return coeffs;
}

namespace detail {

// Exact quotient of a polynomial by (z - root) when root is a known root.
template <Scalar S>
ScalarPoly<S> divide_by_linear_root(const ScalarPoly<S>& p, const S& root) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    std::vector<S> out(c.size() - 1, S{});
    S carry{};
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * root;
        out[k - 1] = carry;
    }
    return ScalarPoly<S>(std::move(out));
}

} // namespace detail

// det(r_1(z) ... r_n(z)) by evaluation at deg+1 points and Lagrange
// interpolation; exact on the rational backend. The result is nonzero, has
// degree N, and vanishes at every interpolation node.
template <Scalar S>
ScalarPoly<S> generator_determinant(const GeneratorSet<S>& gens) {
    const std::size_t n = gens.n;
    invariant(gens.generators.size() == n, "generator set is incomplete");
    int degree_bound = 0;
    for (const VectorPoly<S>& r : gens.generators) {
        int d = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!r.entry(i).is_zero()) d = std::max(d, r.entry(i).degree());
        degree_bound += d;
    }
    const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
    std::vector<S> xs(points);
    std::vector<S> ys(points);
    for (std::size_t t = 0; t < points; ++t) {
        xs[t] = FieldTraits<S>::from_int(static_cast<long>(t));
        Matrix<S> m(n, n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                m.at(row, col) = gens.generators[col].entry(row).evaluate(xs[t]);
        ys[t] = determinant(std::move(m));
    }
    // Lagrange form over the full node polynomial.
    ScalarPoly<S> full = ScalarPoly<S>::one();
    for (std::size_t t = 0; t < points; ++t) full = full * ScalarPoly<S>({-xs[t], S{1L}});
    ScalarPoly<S> q;
    for (std::size_t t = 0; t < points; ++t) {
        if (is_zero(ys[t])) continue;
        ScalarPoly<S> basis = detail::divide_by_linear_root(full, xs[t]);
        q += basis.scaled(ys[t] / basis.evaluate(xs[t]));
    }
    return q;
}

// Dimension of the truncated solution space {p : h(p) <= m}, computed from
// the constraint rank and from the generator heights, cross-checked.
template <Scalar S>
std::size_t solution_dim(const Problem<S>& prob, const GeneratorSet<S>& gens, int m) {
    require(m >= 0, "height cap must be nonnegative");
    EchelonResult<S> ech = reduced_row_echelon(constraint_matrix(prob, m));
    const std::size_t by_rank = static_cast<std::size_t>(m) + 1 - ech.rank();
    std::size_t by_generators = 0;
    for (int h : gens.heights)
        if (h <= m) by_generators += static_cast<std::size_t>((m - h) / static_cast<int>(gens.n)) + 1;
    invariant(by_rank == by_generators,
              "solution dimension mismatch: rank route " + std::to_string(by_rank) +
                  ", generator route " + std::to_string(by_generators));
    return by_rank;
}

template <Scalar S>
std::size_t solution_dim(const Problem<S>& prob, int m) {
    return solution_dim(prob, generators(prob), m);
}

} // namespace vpinterp
