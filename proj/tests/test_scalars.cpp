#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vpinterp/approx.hpp"
#include "vpinterp/field.hpp"
#include "vpinterp/rational.hpp"
#include "vpinterp/testkit.hpp"

using namespace vpinterp;

namespace {
GaussianRational gr(const char* re, const char* im) {
    return GaussianRational::from_strings(re, im);
}
} // namespace

TEST_CASE("exact field arithmetic on worked values") {
    // (1/2 + i)(1/2 - i) = 5/4
    CHECK(gr("1/2", "1") * gr("1/2", "-1") == gr("5/4", "0"));
    // conj(2 - 3i) = 2 + 3i
    CHECK(conj(gr("2", "-3")) == gr("2", "3"));
    // (1+i)/(1-i) = i, cross-checked by (1-i)*i = 1+i
    GaussianRational q = gr("1", "1") / gr("1", "-1");
    CHECK(q == GaussianRational::imaginary_unit());
    CHECK(gr("1", "-1") * q == gr("1", "1"));
}

TEST_CASE("abs_square") {
    CHECK(abs_square(GaussianRational{}) == GaussianRational{});
    CHECK(abs_square(gr("1", "1")) == gr("2", "0"));
    CHECK(abs_square(gr("3/5", "4/5")) == gr("1", "0"));
}

TEST_CASE("division by zero is an arithmetic error") {
    CHECK_THROWS_AS(gr("1", "0") / GaussianRational{}, ArithmeticError);
}

TEST_CASE("string parsing normalizes and validates") {
    CHECK(gr("0/1", "0") == GaussianRational{});
    CHECK(gr("2/4", "0") == gr("1/2", "0"));
    CHECK(gr("3/-6", "0") == gr("-1/2", "0"));
    CHECK(rational_to_string(rational_from_string("0/1")) == "0");
    CHECK(rational_to_string(rational_from_string("-10/4")) == "-5/2");
    CHECK_THROWS_AS(rational_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rational_from_string("a"), ValidationError);
    CHECK_THROWS_AS(rational_from_string(""), ValidationError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ValidationError);
}

TEST_CASE("field axioms on random canonical values") {
    TestRng rng(20240811);
    for (int iter = 0; iter < 300; ++iter) {
        GaussianRational a = rng.scalar(10);
        GaussianRational b = rng.scalar(10);
        GaussianRational c = rng.scalar(10);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == GaussianRational{});
        if (!is_zero(a)) {
            CHECK(a * (GaussianRational{1L} / a) == GaussianRational{1L});
            CHECK((b / a) * a == b);
        }
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(abs_square(a) == a * conj(a));
    }
}

TEST_CASE("approximate scalar zero tolerance") {
    ApproxComplex v(1e-12, 0.0, 1e-9);
    CHECK(is_zero(v));
    CHECK(is_zero_scaled(v, 100.0));
    ApproxComplex w(1e-6, 0.0, 1e-9);
    CHECK(!is_zero(w));
    // |w| <= tol * scale once the context magnitude is large enough
    CHECK(is_zero_scaled(w, 1e4));
}

TEST_CASE("approximate arithmetic keeps the larger tolerance") {
    ApproxComplex a(1.0, 2.0, 1e-9);
    ApproxComplex b(3.0, -1.0, 1e-6);
    CHECK((a * b).zero_tol() == 1e-6);
    CHECK((a + b).zero_tol() == 1e-6);
    CHECK_THROWS_AS(a / ApproxComplex{}, ArithmeticError);
}
