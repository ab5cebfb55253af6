#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vpinterp/approx.hpp"
#include "vpinterp/solver.hpp"

// The floating backend drives the same templates as the exact one; these
// tests pin the tolerance semantics and a small end-to-end solve.

using namespace vpinterp;

namespace {
ApproxComplex ac(double re, double im = 0.0) { return {re, im, 1e-9}; }
} // namespace

TEST_CASE("approximate generators of the worked fixture") {
    Problem<ApproxComplex> prob = Problem<ApproxComplex>::normalized(
        2, {Node<ApproxComplex>{ac(0.0), {ac(1.0), ac(1.0)}}});
    GeneratorSet<ApproxComplex> gens = generators(prob);
    CHECK(gens.heights == std::vector<int>{1, 2});
    CHECK(gens.height_sum() == 3);
    for (const auto& g : gens.generators) CHECK(check_solution(g, prob));
}

TEST_CASE("approximate constructive solution") {
    Problem<ApproxComplex> prob = Problem<ApproxComplex>::normalized(
        2, {Node<ApproxComplex>{ac(0.0), {ac(1.0), ac(1.0)}},
            Node<ApproxComplex>{ac(1.0), {ac(2.0), ac(-1.0)}}});
    VectorPoly<ApproxComplex> r = constructive_solution(prob);
    CHECK(check_solution(r, prob));
    CHECK(height(r) <= Height::of(2));
}

TEST_CASE("tolerance folds tiny coefficients to zero") {
    // a polynomial whose leading coefficient is numerically negligible
    ScalarPoly<ApproxComplex> tiny({ac(1.0), ApproxComplex(1e-13, 0.0, 1e-9)});
    CHECK(tiny.degree() == 0);

    // coincidence of nodes is tolerance-based as well
    Problem<ApproxComplex> prob = Problem<ApproxComplex>::normalized(
        2, {Node<ApproxComplex>{ac(0.5), {ac(1.0), ac(1.0)}},
            Node<ApproxComplex>{ApproxComplex(0.5 + 1e-13, 0.0, 1e-9), {ac(2.0), ac(2.0)}}});
    CHECK(prob.node_count() == 1);
}
