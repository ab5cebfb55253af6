#pragma once

#include <concepts>
#include <optional>

#include "vpinterp/approx.hpp"
#include "vpinterp/rational.hpp"

namespace vpinterp {

// The scalar interface every generic algorithm is written against. Both the
// exact Gaussian-rational backend and the floating backend model it.
template <class S>
concept Scalar = requires(const S a, const S b) {
    S{};
    S{1L};
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { conj(a) } -> std::convertible_to<S>;
    { abs_square(a) } -> std::convertible_to<S>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

template <class S>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool is_exact = true;

    static GaussianRational from_int(long v) { return GaussianRational(v); }

    // Zero tests in elimination ignore the scale on the exact backend.
    static bool is_zero_scaled(const GaussianRational& v, double) { return is_zero(v); }

    // Any nonzero entry is an equally good pivot; first hit wins.
    static double pivot_weight(const GaussianRational& v) { return is_zero(v) ? 0.0 : 1.0; }

    // Exact square root of a nonnegative rational (zero imaginary part), if
    // one exists in Q.
    static std::optional<GaussianRational> sqrt_nonneg(const GaussianRational& v) {
        if (sgn(v.imag()) != 0 || sgn(v.real()) < 0) return std::nullopt;
        const mpq_class& q = v.real();
        if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
            !mpz_perfect_square_p(q.get_den().get_mpz_t()))
            return std::nullopt;
        mpz_class num, den;
        mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
        return GaussianRational(mpq_class(num, den), mpq_class(0));
    }
};

template <>
struct FieldTraits<ApproxComplex> {
    static constexpr bool is_exact = false;

    static ApproxComplex from_int(long v) { return ApproxComplex(v); }

    static bool is_zero_scaled(const ApproxComplex& v, double scale) {
        return vpinterp::is_zero_scaled(v, scale);
    }

    static double pivot_weight(const ApproxComplex& v) { return v.magnitude(); }

    static std::optional<ApproxComplex> sqrt_nonneg(const ApproxComplex& v) {
        if (v.real() < 0.0 && !is_zero(v)) return std::nullopt;
        return ApproxComplex(std::sqrt(std::max(v.real(), 0.0)), 0.0, v.zero_tol());
    }
};

} // namespace vpinterp
