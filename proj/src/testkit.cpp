#include "vpinterp/testkit.hpp"

namespace vpinterp {

VectorPoly<GaussianRational> random_vector_poly(TestRng& rng, std::size_t n, int target_height,
                                                long bound) {
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(target_height) + 1);
    for (auto& c : coeffs) c = rng.scalar(bound);
    coeffs.back() = rng.nonzero_scalar(bound);
    return rebuild(n, coeffs);
}

ScalarPoly<GaussianRational> random_scalar_poly(TestRng& rng, int degree, long bound) {
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = rng.scalar(bound);
    coeffs.back() = rng.nonzero_scalar(bound);
    return ScalarPoly<GaussianRational>(std::move(coeffs));
}

Matrix<GaussianRational> random_matrix(TestRng& rng, std::size_t n, long bound) {
    Matrix<GaussianRational> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = rng.scalar(bound);
    return a;
}

Matrix<GaussianRational> random_upper_triangular(TestRng& rng, std::size_t n, long bound) {
    Matrix<GaussianRational> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) a.at(r, c) = rng.scalar(bound);
    return a;
}

Matrix<GaussianRational> random_lower_triangular(TestRng& rng, std::size_t n, long bound) {
    Matrix<GaussianRational> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c) a.at(r, c) = rng.scalar(bound);
    return a;
}

Problem<GaussianRational> random_problem(const ProblemSpecSeed& spec, NormalizeReport* report) {
    require(spec.n >= 1, "dimension must be >= 1");
    require(spec.coefficient_bound >= 1, "coefficient bound must be >= 1");
    TestRng rng(spec.seed);
    std::vector<Node<GaussianRational>> nodes;
    nodes.reserve(spec.N);
    for (std::size_t j = 0; j < spec.N; ++j) {
        Node<GaussianRational> node;
        node.z = rng.scalar(spec.coefficient_bound);
        node.alpha.resize(spec.n);
        bool any = false;
        for (std::size_t k = 0; k < spec.n; ++k) {
            node.alpha[k] = rng.scalar(spec.coefficient_bound);
            if (!is_zero(node.alpha[k])) any = true;
        }
        if (!any) node.alpha[rng.below(spec.n)] = rng.nonzero_scalar(spec.coefficient_bound);
        nodes.push_back(std::move(node));
    }
    return Problem<GaussianRational>::normalized(spec.n, std::move(nodes), report);
}

std::size_t oracle_dim(const Problem<GaussianRational>& prob, int m) {
    require(m >= 0, "height cap must be nonnegative");
    const std::size_t n = prob.n();
    const std::size_t rows = static_cast<std::size_t>(m) + 1; // transposed system
    const std::size_t cols = prob.node_count();

    // b[r][c] = alpha_{r mod n}(c) * z_c^{r div n}, the transpose of the
    // usual linearization, assembled directly from the problem data.
    std::vector<std::vector<GaussianRational>> b(rows,
                                                 std::vector<GaussianRational>(cols));
    for (std::size_t c = 0; c < cols; ++c) {
        GaussianRational zpow{1L};
        std::size_t power = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            while (power < r / n) {
                zpow = zpow * prob.node(c).z;
                ++power;
            }
            b[r][c] = prob.node(c).alpha[r % n] * zpow;
        }
    }

    // Row echelon scanning columns right to left and rows bottom up; only
    // the pivot count matters.
    std::size_t rank = 0;
    std::size_t next = rows;
    for (std::size_t c = cols; c-- > 0;) {
        if (next == 0) break;
        std::size_t found = rows;
        for (std::size_t r = next; r-- > 0;) {
            if (!is_zero(b[r][c])) {
                found = r;
                break;
            }
        }
        if (found == rows) continue;
        std::swap(b[found], b[next - 1]);
        const std::size_t prow = next - 1;
        for (std::size_t r = 0; r < prow; ++r) {
            if (is_zero(b[r][c])) continue;
            GaussianRational f = b[r][c] / b[prow][c];
            for (std::size_t k = 0; k < cols; ++k) b[r][k] -= f * b[prow][k];
        }
        ++rank;
        --next;
    }
    return rows - rank;
}

} // namespace vpinterp
