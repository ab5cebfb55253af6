#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vpinterp/matrix.hpp"
#include "vpinterp/poly.hpp"
#include "vpinterp/problem.hpp"
#include "vpinterp/rational.hpp"

namespace vpinterp {

// Deterministic random draws. Uses the engine output directly (no standard
// distributions, whose streams differ between library implementations), so a
// seed reproduces the same values everywhere.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        invariant(bound > 0, "empty draw range");
        return eng_() % bound;
    }

    long int_in(long lo, long hi) {
        invariant(lo <= hi, "empty draw range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    // Rational with |numerator| <= bound and 1 <= denominator <= bound.
    mpq_class rational(long bound) {
        mpq_class q(int_in(-bound, bound), int_in(1, bound));
        q.canonicalize();
        return q;
    }

    // Zero with probability 1/4, otherwise a bounded rational; imaginary
    // parts appear with probability 1/3.
    GaussianRational scalar(long bound) {
        if (chance(1, 4)) return GaussianRational{};
        mpq_class re = rational(bound);
        mpq_class im = chance(1, 3) ? rational(bound) : mpq_class(0);
        return {std::move(re), std::move(im)};
    }

    GaussianRational nonzero_scalar(long bound) {
        for (;;) {
            GaussianRational s = scalar(bound);
            if (!is_zero(s)) return s;
        }
    }

private:
    std::mt19937_64 eng_;
};

// Random structured values for property sweeps.

// Vector polynomial of exactly the requested height.
VectorPoly<GaussianRational> random_vector_poly(TestRng& rng, std::size_t n, int target_height,
                                                long bound = 5);

ScalarPoly<GaussianRational> random_scalar_poly(TestRng& rng, int degree, long bound = 5);

Matrix<GaussianRational> random_matrix(TestRng& rng, std::size_t n, long bound = 5);
Matrix<GaussianRational> random_upper_triangular(TestRng& rng, std::size_t n, long bound = 5);
Matrix<GaussianRational> random_lower_triangular(TestRng& rng, std::size_t n, long bound = 5);

// Reproducible random-problem specification: identical seeds give identical
// problems bit for bit.
struct ProblemSpecSeed {
    std::uint64_t seed = 0;
    std::size_t n = 2;
    std::size_t N = 1;
    long coefficient_bound = 10;
};

Problem<GaussianRational> random_problem(const ProblemSpecSeed& spec,
                                         NormalizeReport* report = nullptr);

// Independent dimension oracle: (m+1) - rank, with the rank obtained by a
// plain row-echelon pass over the transposed constraint system, built and
// eliminated by code that shares nothing with the graded-kernel path.
std::size_t oracle_dim(const Problem<GaussianRational>& prob, int m);

} // namespace vpinterp
