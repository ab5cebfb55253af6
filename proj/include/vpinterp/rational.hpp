#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "vpinterp/errors.hpp"

namespace vpinterp {

// Exact element of Q(i): rational real and imaginary parts kept in GMP
// canonical form (lowest terms, positive denominator). Values are immutable
// in spirit; all operators return fresh values, so instances can be shared
// across threads freely.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {} // NOLINT: implicit for integer literals
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    // Accepts "p", "p/q" or "-p/q" with decimal integers; "0/1" is normalized.
    static GaussianRational from_strings(const std::string& re, const std::string& im);

    static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {mpq_class(-a.re_), mpq_class(-a.im_)};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Diagnostic form, e.g. "1/2+3i".
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

inline bool is_zero(const GaussianRational& a) {
    return sgn(a.real()) == 0 && sgn(a.imag()) == 0;
}

inline GaussianRational conj(const GaussianRational& a) {
    return {mpq_class(a.real()), mpq_class(-a.imag())};
}

inline GaussianRational abs_square(const GaussianRational& a) {
    return {mpq_class(a.real() * a.real() + a.imag() * a.imag()), mpq_class(0)};
}

inline GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (is_zero(o)) throw ArithmeticError("division by zero in Q(i)");
    mpq_class d = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

// Canonical decimal form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const mpq_class& q);

// Parses "p" or "p/q"; throws ValidationError on malformed input or zero
// denominator. The result is canonicalized.
mpq_class rational_from_string(const std::string& s);

} // namespace vpinterp
