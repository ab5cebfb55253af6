#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "vpinterp/errors.hpp"

namespace vpinterp {

// Floating complex scalar for large instances where exact arithmetic is too
// slow. Every value carries the zero tolerance it was created under; mixed
// expressions keep the larger one. A value counts as zero when
// |v| <= zero_tol * scale for the caller-supplied context magnitude
// (scale >= 1, default 1).
class ApproxComplex {
public:
    ApproxComplex() : re_(0.0), im_(0.0), tol_(0.0) {}
    ApproxComplex(long v) : re_(static_cast<double>(v)), im_(0.0), tol_(0.0) {} // NOLINT
    ApproxComplex(double re, double im, double zero_tol) : re_(re), im_(im), tol_(zero_tol) {}

    double real() const { return re_; }
    double imag() const { return im_; }
    double zero_tol() const { return tol_; }

    ApproxComplex& operator+=(const ApproxComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        tol_ = std::max(tol_, o.tol_);
        return *this;
    }
    ApproxComplex& operator-=(const ApproxComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        tol_ = std::max(tol_, o.tol_);
        return *this;
    }
    ApproxComplex& operator*=(const ApproxComplex& o) {
        double re = re_ * o.re_ - im_ * o.im_;
        double im = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        im_ = im;
        tol_ = std::max(tol_, o.tol_);
        return *this;
    }
    ApproxComplex& operator/=(const ApproxComplex& o) {
        double d = o.re_ * o.re_ + o.im_ * o.im_;
        if (d == 0.0) throw ArithmeticError("division by zero (approximate backend)");
        double re = (re_ * o.re_ + im_ * o.im_) / d;
        double im = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = re;
        im_ = im;
        tol_ = std::max(tol_, o.tol_);
        return *this;
    }

    friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
    friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
    friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
    friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
    friend ApproxComplex operator-(const ApproxComplex& a) { return {-a.re_, -a.im_, a.tol_}; }

    double magnitude() const { return std::hypot(re_, im_); }

    // Equality up to the carried tolerance; used by the generic algorithms
    // only for yes/no coefficient decisions.
    friend bool operator==(const ApproxComplex& a, const ApproxComplex& b) {
        ApproxComplex d = a - b;
        return d.magnitude() <= d.tol_;
    }
    friend bool operator!=(const ApproxComplex& a, const ApproxComplex& b) { return !(a == b); }

    std::string str() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", re_, im_);
        return buf;
    }

private:
    double re_;
    double im_;
    double tol_;
};

inline bool is_zero_scaled(const ApproxComplex& v, double scale) {
    return v.magnitude() <= v.zero_tol() * std::max(scale, 1.0);
}

inline bool is_zero(const ApproxComplex& v) { return is_zero_scaled(v, 1.0); }

inline ApproxComplex conj(const ApproxComplex& v) { return {v.real(), -v.imag(), v.zero_tol()}; }

inline ApproxComplex abs_square(const ApproxComplex& v) {
    return {v.real() * v.real() + v.imag() * v.imag(), 0.0, v.zero_tol()};
}

} // namespace vpinterp
