#include "vpinterp/verify.hpp"

#include <algorithm>

namespace vpinterp {

namespace {

using Exact = GaussianRational;

VectorPoly<Exact> combine(const std::vector<ScalarPoly<Exact>>& coeffs,
                          const GeneratorSet<Exact>& gens) {
    VectorPoly<Exact> acc(gens.n);
    for (std::size_t j = 0; j < gens.n; ++j) acc += scalar_mul(coeffs[j], gens.generators[j]);
    return acc;
}

} // namespace

ProblemChecks run_problem_checks(const Problem<Exact>& prob, std::uint64_t seed,
                                 const CheckOptions& options) {
    ProblemChecks out;
    const std::size_t n = prob.n();
    const long long N = static_cast<long long>(prob.node_count());
    TestRng rng(seed);

    GeneratorSet<Exact> gens;
    try {
        gens = generators(prob);
    } catch (const std::exception& e) {
        out.failures.emplace_back(std::string("generator computation failed: ") + e.what());
        return out;
    }

    out.height_sum_ok =
        gens.height_sum() == N * static_cast<long long>(n) + static_cast<long long>(n * (n - 1) / 2);
    if (!out.height_sum_ok)
        out.failures.push_back("height sum " + std::to_string(gens.height_sum()) +
                               " != N n + n(n-1)/2");

    std::vector<bool> seen(n, false);
    for (int h : gens.heights) seen[static_cast<std::size_t>(h) % n] = true;
    out.residues_ok = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (!out.residues_ok) out.failures.emplace_back("generator heights miss a residue class");

    out.first_bound_ok = gens.heights.front() <= N;
    if (!out.first_bound_ok)
        out.failures.push_back("first generator height " + std::to_string(gens.heights.front()) +
                               " exceeds N = " + std::to_string(N));

    out.partial_sums_ok = true;
    long long partial = 0;
    for (std::size_t m = 1; m <= n; ++m) {
        partial += gens.heights[m - 1];
        if (partial > N * static_cast<long long>(m) + static_cast<long long>(m * (m - 1) / 2)) {
            out.partial_sums_ok = false;
            out.failures.push_back("partial height sum violates the estimate at m = " +
                                   std::to_string(m));
        }
    }

    out.generators_solve_ok = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (!check_solution(gens.generators[j], prob) ||
            height(gens.generators[j]) != Height::of(gens.heights[j])) {
            out.generators_solve_ok = false;
            out.failures.push_back("generator " + std::to_string(j + 1) +
                                   " is not a solution of stated height");
        }
    }

    out.constructive_ok = true;
    try {
        VectorPoly<Exact> c = constructive_solution(prob);
        if (!check_solution(c, prob) || !(height(c) <= Height::of(static_cast<int>(N)))) {
            out.constructive_ok = false;
            out.failures.emplace_back("constructive solution invalid or above height N");
        } else if (combine(decompose(c, gens), gens) != c) {
            out.constructive_ok = false;
            out.failures.emplace_back("constructive solution does not decompose exactly");
        }
    } catch (const std::exception& e) {
        out.constructive_ok = false;
        out.failures.emplace_back(std::string("constructive solution failed: ") + e.what());
    }

    out.roundtrip_ok = true;
    if (options.roundtrip) try {
        std::vector<ScalarPoly<Exact>> coeffs(n);
        bool all_zero = true;
        for (auto& s : coeffs) {
            if (rng.chance(1, 5)) continue;
            s = random_scalar_poly(rng, static_cast<int>(rng.below(4)), 5);
            all_zero = false;
        }
        if (all_zero) coeffs[0] = ScalarPoly<Exact>::one();
        VectorPoly<Exact> p = combine(coeffs, gens);
        std::vector<ScalarPoly<Exact>> rec = decompose(p, gens);
        for (std::size_t j = 0; j < n; ++j)
            if (!(rec[j] == coeffs[j])) out.roundtrip_ok = false;
        if (combine(rec, gens) != p) out.roundtrip_ok = false;
        if (!out.roundtrip_ok)
            out.failures.emplace_back("decomposition round trip is not exact");
    } catch (const std::exception& e) {
        out.roundtrip_ok = false;
        out.failures.emplace_back(std::string("decomposition round trip failed: ") + e.what());
    }

    out.dims_ok = true;
    if (options.dims) try {
        const int top = module_cap(n, prob.node_count()) + 2 * static_cast<int>(n);
        for (int m = 0; m <= top; ++m) {
            if (solution_dim(prob, gens, m) != oracle_dim(prob, m)) {
                out.dims_ok = false;
                out.failures.push_back("dimension mismatch against the oracle at cap " +
                                       std::to_string(m));
            }
        }
    } catch (const std::exception& e) {
        out.dims_ok = false;
        out.failures.emplace_back(std::string("dimension check failed: ") + e.what());
    }

    out.determinant_ok = true;
    try {
        ScalarPoly<Exact> q = generator_determinant(gens);
        if (q.is_zero() || q.degree() != static_cast<int>(N)) {
            out.determinant_ok = false;
            out.failures.emplace_back("det(r_1..r_n) degree != N");
        } else {
            bool distinct = true;
            for (std::size_t a = 0; a < prob.node_count(); ++a) {
                if (!is_zero(q.evaluate(prob.node(a).z))) {
                    out.determinant_ok = false;
                    out.failures.push_back("det does not vanish at node " + std::to_string(a + 1));
                }
                for (std::size_t b = a + 1; b < prob.node_count(); ++b)
                    if (prob.node(a).z == prob.node(b).z) distinct = false;
            }
            if (distinct) {
                ScalarPoly<Exact> nodes_poly = ScalarPoly<Exact>::one();
                for (const auto& nd : prob.nodes())
                    nodes_poly = nodes_poly * ScalarPoly<Exact>({-nd.z, Exact{1L}});
                if (!(q == nodes_poly.scaled(q.leading()))) {
                    out.determinant_ok = false;
                    out.failures.emplace_back("det is not a constant multiple of prod (z - z_j)");
                }
            }
        }
    } catch (const std::exception& e) {
        out.determinant_ok = false;
        out.failures.emplace_back(std::string("determinant certificate failed: ") + e.what());
    }

    return out;
}

std::vector<std::string> run_lemma_suite(std::uint64_t seed, int cases) {
    std::vector<std::string> failures;
    TestRng rng(seed);
    auto fail = [&](const char* what, int iter) {
        failures.push_back(std::string(what) + " (case " + std::to_string(iter) + ")");
    };

    for (int iter = 0; iter < cases; ++iter) {
        std::size_t n = 2 + rng.below(4);

        // linear combinations: distinct heights take the max, equal heights
        // never grow, and the reduction constant drops the height
        {
            int hp = static_cast<int>(rng.below(12));
            int hq = static_cast<int>(rng.below(12));
            VectorPoly<Exact> p = random_vector_poly(rng, n, hp);
            VectorPoly<Exact> q = random_vector_poly(rng, n, hq);
            Exact a = rng.nonzero_scalar(5);
            Exact b = rng.nonzero_scalar(5);
            VectorPoly<Exact> comb = p.scaled(a) + q.scaled(b);
            if (hp != hq) {
                if (height(comb) != Height::of(std::max(hp, hq)))
                    fail("combination of distinct heights missed the max", iter);
            } else {
                if (!(height(comb) <= Height::of(hp)))
                    fail("combination of equal heights grew", iter);
                Exact c = reduce_pair(p, q);
                if (!(height(p + q.scaled(c)) < Height::of(hp)))
                    fail("pair reduction failed to drop the height", iter);
            }
        }

        // scalar multiplication shifts the height by n deg S
        {
            VectorPoly<Exact> p = random_vector_poly(rng, n, static_cast<int>(rng.below(10)));
            ScalarPoly<Exact> s = random_scalar_poly(rng, static_cast<int>(rng.below(4)));
            if (height(scalar_mul(s, p)) !=
                Height::of(height(p).value() + static_cast<int>(n) * s.degree()))
                fail("scalar multiplication height law", iter);
        }

        // canonical expansion is a bijection
        {
            VectorPoly<Exact> p = random_vector_poly(rng, n, static_cast<int>(rng.below(12)));
            std::vector<Exact> c = expand(p);
            if (rebuild(n, c) != p || !(expand(rebuild(n, c)) == c))
                fail("canonical expansion round trip", iter);
        }

        // graded expansion reconstructs over a random graded family
        {
            int m = static_cast<int>(rng.below(8));
            VectorPoly<Exact> p = random_vector_poly(rng, n, m);
            std::vector<VectorPoly<Exact>> g;
            for (int j = 1; j <= m + 1; ++j) {
                std::vector<Exact> coeffs(static_cast<std::size_t>(j));
                for (auto& c : coeffs) c = rng.scalar(4);
                coeffs.back() = rng.nonzero_scalar(4);
                g.push_back(rebuild(n, coeffs));
            }
            std::vector<Exact> d = expand_in_graded_basis(p, g);
            VectorPoly<Exact> back(n);
            for (std::size_t k = 0; k < d.size(); ++k) back += g[k].scaled(d[k]);
            if (back != p) fail("graded expansion reconstruction", iter);
        }

        // matrix action bounds: general, upper, lower
        {
            int hp = static_cast<int>(rng.below(12));
            VectorPoly<Exact> p = random_vector_poly(rng, n, hp);
            if (!(height(apply_matrix(random_matrix(rng, n), p)) <=
                  Height::of(hp + static_cast<int>(n) - 1)))
                fail("general matrix height bound", iter);
            if (!(height(apply_matrix(random_upper_triangular(rng, n), p)) <= Height::of(hp)))
                fail("upper triangular height bound", iter);
            int k = static_cast<int>(rng.below(3));
            int block = static_cast<int>(n) * k + static_cast<int>(n) - 1;
            VectorPoly<Exact> pb = random_vector_poly(rng, n, static_cast<int>(rng.below(block + 1)));
            if (!(height(apply_matrix(random_lower_triangular(rng, n), pb)) <= Height::of(block)))
                fail("lower triangular block bound", iter);
        }

        // interior pivot rows preserve the block bound (needs n >= 3, so the
        // dimension is drawn separately to keep a full case count)
        {
            std::size_t n3 = 3 + rng.below(3);
            std::size_t pivot = 1 + rng.below(n3 - 2);
            int k = static_cast<int>(rng.below(3));
            int bound = static_cast<int>(n3) * k + static_cast<int>(pivot);
            VectorPoly<Exact> p =
                random_vector_poly(rng, n3, static_cast<int>(rng.below(bound + 1)));
            std::vector<Exact> row(n3);
            for (auto& v : row) v = rng.scalar(6);
            row[pivot] = rng.nonzero_scalar(6);
            try {
                apply_pivot_height_check(build_pivot_matrix(row, pivot), p, bound);
            } catch (const std::exception&) {
                fail("interior pivot-row height law", iter);
            }
        }

        // degree-one substitution raises the height by at most one, cyclically
        {
            int k = static_cast<int>(rng.below(3));
            int j = static_cast<int>(rng.below(n));
            int cap = static_cast<int>(n) * k + j;
            VectorPoly<Exact> p = random_vector_poly(rng, n, static_cast<int>(rng.below(cap + 1)));
            std::size_t l = (static_cast<std::size_t>(j) + 1) % n;
            ScalarPoly<Exact> s({rng.scalar(5), rng.nonzero_scalar(5)});
            if (!(height(apply_T(l, s, p)) <= Height::of(cap + 1)))
                fail("degree-one substitution height law", iter);
        }
    }
    return failures;
}

} // namespace vpinterp
