#pragma once

// Shared aliases for the exact-backend test suites. The seeded generators
// live in the library's testkit so the CLI selftest can reuse them; a
// failing case reproduces from its seed alone.

#include "vpinterp/testkit.hpp"

namespace vpinterp::testing {

using Exact = GaussianRational;
using Poly = ScalarPoly<Exact>;
using VPoly = VectorPoly<Exact>;

using vpinterp::random_lower_triangular;
using vpinterp::random_matrix;
using vpinterp::random_scalar_poly;
using vpinterp::random_upper_triangular;
using vpinterp::random_vector_poly;

} // namespace vpinterp::testing
