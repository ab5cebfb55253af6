#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vpinterp/transforms.hpp"

using namespace vpinterp;
using namespace vpinterp::testing;

namespace {
Poly zpoly(std::initializer_list<long> coeffs) {
    std::vector<Exact> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}
} // namespace

TEST_CASE("apply_matrix worked examples") {
    VPoly p(2);
    p.set_entry(1, zpoly({0, 1})); // (0, z)^t, h = 3
    CHECK(apply_matrix(Matrix<Exact>::identity(2), p) == p);

    Matrix<Exact> upper(2, 2);
    upper.at(0, 0) = 1L;
    upper.at(0, 1) = 1L;
    upper.at(1, 1) = 1L;
    VPoly up = apply_matrix(upper, p); // (z, z)^t
    CHECK(up.entry(0) == zpoly({0, 1}));
    CHECK(up.entry(1) == zpoly({0, 1}));
    CHECK(height(up) == Height::of(3));

    Matrix<Exact> swap(2, 2);
    swap.at(0, 1) = 1L;
    swap.at(1, 0) = 1L;
    VPoly q(2);
    q.set_entry(0, zpoly({0, 1})); // (z, 0)^t, h = 2
    VPoly sq = apply_matrix(swap, q);
    CHECK(height(sq) == Height::of(3)); // bound h(p)+n-1 attained

    CHECK_THROWS_AS(apply_matrix(Matrix<Exact>::identity(3), p), ValidationError);
}

TEST_CASE("general height law under matrices (500 random cases)") {
    TestRng rng(101);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 2 + rng.below(4);
        int hp = static_cast<int>(rng.below(14));
        VPoly p = random_vector_poly(rng, n, hp);
        Matrix<Exact> a = random_matrix(rng, n);
        Height h = height(apply_matrix(a, p));
        CHECK(h <= Height::of(hp + static_cast<int>(n) - 1));
    }
}

TEST_CASE("upper triangular matrices never raise the height") {
    TestRng rng(103);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 2 + rng.below(4);
        int hp = static_cast<int>(rng.below(14));
        VPoly p = random_vector_poly(rng, n, hp);
        Matrix<Exact> a = random_upper_triangular(rng, n);
        CHECK(height(apply_matrix(a, p)) <= Height::of(hp));
    }
}

TEST_CASE("lower triangular matrices respect block boundaries") {
    TestRng rng(107);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 2 + rng.below(4);
        int k = static_cast<int>(rng.below(4));
        int bound = static_cast<int>(n) * k + static_cast<int>(n) - 1;
        VPoly p = random_vector_poly(rng, n, static_cast<int>(rng.below(bound + 1)));
        Matrix<Exact> a = random_lower_triangular(rng, n);
        CHECK(height(apply_matrix(a, p)) <= Height::of(bound));
    }
}

TEST_CASE("build_pivot_matrix worked examples") {
    // n=3, alpha=(1,2,1), pivot row 2 (1-based) -> (-1/2, 1/2, -1/2)
    std::vector<Exact> alpha = {Exact{1L}, Exact{2L}, Exact{1L}};
    PivotRowMatrix<Exact> a = build_pivot_matrix(alpha, 1);
    CHECK(a.base.at(1, 0) == GaussianRational::from_strings("-1/2", "0"));
    CHECK(a.base.at(1, 1) == GaussianRational::from_strings("1/2", "0"));
    CHECK(a.base.at(1, 2) == GaussianRational::from_strings("-1/2", "0"));
    std::vector<Exact> beta = row_times_matrix(alpha, a.base);
    CHECK(beta[0] == Exact{});
    CHECK(beta[1] == Exact{1L});
    CHECK(beta[2] == Exact{});

    // n=2, alpha=(0,1), pivot 2 -> identity row
    std::vector<Exact> alpha2 = {Exact{}, Exact{1L}};
    PivotRowMatrix<Exact> a2 = build_pivot_matrix(alpha2, 1);
    CHECK(a2.base == Matrix<Exact>::identity(2));

    std::vector<Exact> alpha3 = {Exact{1L}, Exact{}};
    CHECK_THROWS_AS(build_pivot_matrix(alpha3, 1), ValidationError);
}

TEST_CASE("pivot matrix conjugation leaves a single unit diagonal entry") {
    TestRng rng(109);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 2 + rng.below(4);
        std::vector<Exact> alpha(n);
        for (auto& v : alpha) v = rng.scalar(6);
        std::size_t pivot = rng.below(n);
        alpha[pivot] = rng.nonzero_scalar(6);
        PivotRowMatrix<Exact> a = build_pivot_matrix(alpha, pivot);
        std::vector<Exact> beta = row_times_matrix(alpha, a.base);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(beta[k] == (k == pivot ? Exact{1L} : Exact{}));
        // conj(beta)^t beta is then the single-entry diagonal matrix
        Matrix<Exact> sigma(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sigma.at(r, c) = conj(beta[r]) * beta[c];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                CHECK(sigma.at(r, c) ==
                      ((r == pivot && c == pivot) ? Exact{1L} : Exact{}));
    }
}

TEST_CASE("apply_T worked examples") {
    VPoly p(2);
    p.set_entry(0, zpoly({1}));
    p.set_entry(1, zpoly({1}));
    VPoly t = apply_T<Exact>(1, zpoly({0, 1}), p);
    CHECK(t.entry(0) == zpoly({1}));
    CHECK(t.entry(1) == zpoly({0, 1}));

    CHECK(apply_T<Exact>(0, Poly::one(), p) == p);
    CHECK_THROWS_AS(apply_T<Exact>(5, Poly::one(), p), ValidationError);

    // n=3, p=e_1 (h=0), T at component 2 (1-based) with s=z-1: h <= 1
    VPoly e1 = basis_element<Exact>(1, 3);
    CHECK(height(apply_T<Exact>(1, zpoly({-1, 1}), e1)) <= Height::of(1));
}

TEST_CASE("degree-one substitution height law, cyclic index (500 cases)") {
    TestRng rng(113);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 2 + rng.below(4);
        int k = static_cast<int>(rng.below(3));
        int j = static_cast<int>(rng.below(n)); // h(p) <= nk + j
        int cap = static_cast<int>(n) * k + j;
        VPoly p = random_vector_poly(rng, n, static_cast<int>(rng.below(cap + 1)));
        std::size_t l = (static_cast<std::size_t>(j) + 1) % n; // 0-based T_{j+2}
        Poly s({rng.scalar(5), rng.nonzero_scalar(5)});
        CHECK(height(apply_T(l, s, p)) <= Height::of(cap + 1));
    }
}

TEST_CASE("interior pivot rows preserve the block bound") {
    // n=3, l=2 (1-based), k=0: p=(1,1,0)^t with h=1 stays within bound 1
    VPoly p(3);
    p.set_entry(0, zpoly({1}));
    p.set_entry(1, zpoly({1}));
    std::vector<Exact> alpha = {Exact{1L}, Exact{2L}, Exact{3L}};
    PivotRowMatrix<Exact> a = build_pivot_matrix(alpha, 1);
    VPoly r = apply_pivot_height_check(a, p, 1);
    CHECK(height(r) <= Height::of(1));

    // identity row keeps the height unchanged
    std::vector<Exact> id_alpha = {Exact{}, Exact{1L}, Exact{}};
    PivotRowMatrix<Exact> id = build_pivot_matrix(id_alpha, 1);
    CHECK(apply_pivot_height_check(id, p, 1) == p);

    TestRng rng(127);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t n = 3 + rng.below(3);
        std::size_t pivot = 1 + rng.below(n - 2); // 0-based interior
        int k = static_cast<int>(rng.below(3));
        int bound = static_cast<int>(n) * k + static_cast<int>(pivot);
        VPoly q = random_vector_poly(rng, n, static_cast<int>(rng.below(bound + 1)));
        std::vector<Exact> row(n);
        for (auto& v : row) v = rng.scalar(6);
        row[pivot] = rng.nonzero_scalar(6);
        PivotRowMatrix<Exact> m = build_pivot_matrix(row, pivot);
        VPoly out = apply_pivot_height_check(m, q, bound);
        CHECK(height(out) <= Height::of(bound));
    }
}

TEST_CASE("pivot height check rejects misuse") {
    std::vector<Exact> alpha = {Exact{1L}, Exact{1L}, Exact{1L}};
    PivotRowMatrix<Exact> interior = build_pivot_matrix(alpha, 1);
    VPoly p = basis_element<Exact>(2, 3); // h = 1

    // bound residue must match the pivot (1-based pivot 2 -> bound = 3k+1)
    CHECK_THROWS_AS(apply_pivot_height_check(interior, p, 2), ValidationError);
    // input height above the bound
    VPoly tall = basis_element<Exact>(9, 3); // h = 8
    CHECK_THROWS_AS(apply_pivot_height_check(interior, tall, 1), ValidationError);
    // pivot must be strictly interior
    PivotRowMatrix<Exact> edge = build_pivot_matrix(alpha, 0);
    CHECK_THROWS_AS(apply_pivot_height_check(edge, p, 0), ValidationError);
}
