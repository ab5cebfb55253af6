#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vpinterp/solver.hpp"
#include "vpinterp/testkit.hpp"

namespace vpinterp {

// Per-problem invariant battery shared by the CLI selftest and the
// acceptance suite. Every flag is an exact check; `failures` carries one
// line per violated invariant.
struct ProblemChecks {
    bool height_sum_ok = false;     // sum h(r_j) = N n + n(n-1)/2
    bool residues_ok = false;       // {h(r_j) mod n} = Z/nZ
    bool first_bound_ok = false;    // h(r_1) <= N
    bool partial_sums_ok = false;   // sum_{l<=m} h(r_l) <= N m + m(m-1)/2
    bool generators_solve_ok = false;
    bool constructive_ok = false;   // solves, h <= N, zero-residual decomposition
    bool roundtrip_ok = false;      // decompose(sum S_j r_j) == (S_j) exactly
    bool dims_ok = false;           // both dimension routes == oracle, all caps
    bool determinant_ok = false;    // deg Q = N, Q(z_j) = 0, product form when distinct

    std::vector<std::string> failures;

    bool all_ok() const { return failures.empty(); }
};

struct CheckOptions {
    bool dims = true;      // both dimension routes against the oracle, all caps
    bool roundtrip = true; // random module element decomposition
};

ProblemChecks run_problem_checks(const Problem<GaussianRational>& prob, std::uint64_t seed,
                                 const CheckOptions& options = {});

// Randomized sweeps for the height laws: linear combinations, scalar
// multiplication, canonical and graded expansions, matrix actions, the
// interior pivot-row law, and the degree-one substitution law. Returns one
// line per failed case; empty means the suite passed.
std::vector<std::string> run_lemma_suite(std::uint64_t seed, int cases);

} // namespace vpinterp
