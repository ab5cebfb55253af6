#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vpinterp/errors.hpp"
#include "vpinterp/field.hpp"

namespace vpinterp {

// Grading value of a vector polynomial. Finite heights are nonnegative;
// the zero vector has height minus-infinity, which is a distinct state, not
// a sentinel integer. Arithmetic is only defined on finite heights.
class Height {
public:
    static Height minus_infinity() { return Height(); }
    static Height of(int v) {
        invariant(v >= 0, "finite heights are nonnegative");
        Height h;
        h.finite_ = true;
        h.value_ = v;
        return h;
    }

    bool is_finite() const { return finite_; }

    int value() const {
        invariant(finite_, "height arithmetic on minus-infinity");
        return value_;
    }

    int residue(std::size_t n) const { return static_cast<int>(value() % static_cast<int>(n)); }

    friend bool operator==(const Height& a, const Height& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Height& a, const Height& b) { return !(a == b); }
    friend bool operator<(const Height& a, const Height& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Height& a, const Height& b) { return a < b || a == b; }
    friend bool operator>(const Height& a, const Height& b) { return b < a; }
    friend bool operator>=(const Height& a, const Height& b) { return b <= a; }

    std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    Height() : finite_(false), value_(0) {}

    bool finite_;
    int value_;
};

// Dense scalar polynomial, constant term first, no stored trailing zeros.
// The empty coefficient list is the zero polynomial.
template <Scalar S>
class ScalarPoly {
public:
    ScalarPoly() = default;
    explicit ScalarPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { strip(); }

    static ScalarPoly constant(S v) { return ScalarPoly(std::vector<S>{std::move(v)}); }
    static ScalarPoly one() { return constant(S{1L}); }

    // coeff * z^power
    static ScalarPoly monomial(S coeff, int power) {
        invariant(power >= 0, "monomial power must be nonnegative");
        std::vector<S> c(static_cast<std::size_t>(power) + 1, S{});
        c.back() = std::move(coeff);
        return ScalarPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of a nonzero polynomial; callers must guard the zero case.
    int degree() const {
        invariant(!c_.empty(), "degree of the zero polynomial is minus-infinity");
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<S>& coeffs() const { return c_; }

    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S{}; }

    S leading() const {
        invariant(!c_.empty(), "leading coefficient of the zero polynomial");
        return c_.back();
    }

    S evaluate(const S& z) const {
        S acc{};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
        return acc;
    }

    ScalarPoly& operator+=(const ScalarPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        strip();
        return *this;
    }
    ScalarPoly& operator-=(const ScalarPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S{});
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        strip();
        return *this;
    }

    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }

    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return ScalarPoly(std::move(c));
    }

    friend ScalarPoly operator-(const ScalarPoly& a) { return a.scaled(S{-1L}); }

    ScalarPoly scaled(const S& f) const {
        if (vpinterp::is_zero(f)) return {};
        std::vector<S> c = c_;
        for (S& v : c) v = v * f;
        return ScalarPoly(std::move(c));
    }

    // Multiplication by z^k.
    ScalarPoly shifted(int k) const {
        invariant(k >= 0, "shift exponent must be nonnegative");
        if (is_zero()) return {};
        std::vector<S> c(static_cast<std::size_t>(k), S{});
        c.insert(c.end(), c_.begin(), c_.end());
        return ScalarPoly(std::move(c));
    }

    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (!(a.c_[k] == b.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

private:
    void strip() {
        while (!c_.empty() && vpinterp::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

// Column of n scalar polynomials. Components are 0-based in code; the math
// convention P_1..P_n maps to entry(0)..entry(n-1).
template <Scalar S>
class VectorPoly {
public:
    explicit VectorPoly(std::size_t n) : entries_(n) { require(n >= 1, "dimension must be >= 1"); }
    VectorPoly(std::size_t n, std::vector<ScalarPoly<S>> entries) : entries_(std::move(entries)) {
        require(n >= 1, "dimension must be >= 1");
        require(entries_.size() == n, "entry count must equal the dimension");
    }

    std::size_t n() const { return entries_.size(); }
    const ScalarPoly<S>& entry(std::size_t i) const { return entries_.at(i); }
    void set_entry(std::size_t i, ScalarPoly<S> p) { entries_.at(i) = std::move(p); }
    const std::vector<ScalarPoly<S>>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    VectorPoly& operator+=(const VectorPoly& o) {
        require(n() == o.n(), "dimension mismatch");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    VectorPoly& operator-=(const VectorPoly& o) {
        require(n() == o.n(), "dimension mismatch");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    friend VectorPoly operator+(VectorPoly a, const VectorPoly& b) { return a += b; }
    friend VectorPoly operator-(VectorPoly a, const VectorPoly& b) { return a -= b; }

    VectorPoly scaled(const S& f) const {
        VectorPoly r(n());
        for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i].scaled(f);
        return r;
    }

    friend bool operator==(const VectorPoly& a, const VectorPoly& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const VectorPoly& a, const VectorPoly& b) { return !(a == b); }

private:
    std::vector<ScalarPoly<S>> entries_;
};

// h(p) = max_i (n*deg P_i + i) over nonzero components (0-based i), and
// minus-infinity for the zero vector.
template <Scalar S>
Height height(const VectorPoly<S>& p) {
    const int n = static_cast<int>(p.n());
    bool any = false;
    int best = 0;
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (p.entry(i).is_zero()) continue;
        int h = n * p.entry(i).degree() + static_cast<int>(i);
        if (!any || h > best) best = h;
        any = true;
    }
    return any ? Height::of(best) : Height::minus_infinity();
}

template <Scalar S>
VectorPoly<S> scalar_mul(const ScalarPoly<S>& s, const VectorPoly<S>& p) {
    VectorPoly<S> r(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) r.set_entry(i, s * p.entry(i));
    return r;
}

// e_j for 1-based j: z^k in component i, where j = n*k + i + 1 (0-based i).
// h(e_j) = j - 1.
template <Scalar S>
VectorPoly<S> basis_element(std::size_t j, std::size_t n) {
    require(j >= 1, "basis index must be >= 1");
    std::size_t m = j - 1;
    VectorPoly<S> r(n);
    r.set_entry(m % n, ScalarPoly<S>::monomial(S{1L}, static_cast<int>(m / n)));
    return r;
}

// Coefficients c_0..c_m of p = sum c_k e_{k+1}, m = h(p); empty for p = 0.
template <Scalar S>
std::vector<S> expand(const VectorPoly<S>& p) {
    Height h = height(p);
    if (!h.is_finite()) return {};
    const std::size_t n = p.n();
    std::vector<S> c(static_cast<std::size_t>(h.value()) + 1, S{});
    for (std::size_t i = 0; i < n; ++i) {
        const auto& coeffs = p.entry(i).coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (vpinterp::is_zero(coeffs[k])) continue;
            c[n * k + i] = coeffs[k];
        }
    }
    return c;
}

// Inverse of expand: trailing zero coefficients are permitted and ignored.
template <Scalar S>
VectorPoly<S> rebuild(std::size_t n, const std::vector<S>& coeffs) {
    std::vector<std::vector<S>> comp(n);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (vpinterp::is_zero(coeffs[m])) continue;
        std::size_t i = m % n;
        std::size_t k = m / n;
        if (comp[i].size() <= k) comp[i].resize(k + 1, S{});
        comp[i][k] = coeffs[m];
    }
    VectorPoly<S> r(n);
    for (std::size_t i = 0; i < n; ++i) r.set_entry(i, ScalarPoly<S>(std::move(comp[i])));
    return r;
}

// Coefficient of e_{h(p)+1} in the canonical expansion. The maximizing
// component in the height formula is unique, so this is O(1).
template <Scalar S>
S leading_expansion_coefficient(const VectorPoly<S>& p) {
    Height h = height(p);
    invariant(h.is_finite(), "leading coefficient of the zero vector polynomial");
    std::size_t n = p.n();
    std::size_t i = static_cast<std::size_t>(h.value()) % n;
    std::size_t k = static_cast<std::size_t>(h.value()) / n;
    return p.entry(i).coeff(k);
}

// Expansion over an arbitrary graded family g with h(g_m) = m-1: repeated
// leading-term elimination, i.e. back-substitution on the triangular
// change-of-basis matrix. Only g_1..g_{h(p)+1} are consulted; extra entries
// are ignored.
template <Scalar S>
std::vector<S> expand_in_graded_basis(const VectorPoly<S>& p, const std::vector<VectorPoly<S>>& g) {
    Height hp = height(p);
    if (!hp.is_finite()) return {};
    std::size_t need = static_cast<std::size_t>(hp.value()) + 1;
    require(g.size() >= need, "graded family too short for the target height");
    for (std::size_t m = 0; m < need; ++m) {
        Height hg = height(g[m]);
        require(hg.is_finite() && hg.value() == static_cast<int>(m),
                "graded family violates h(g_m) = m-1 at position " + std::to_string(m + 1));
    }
    std::vector<S> d(need, S{});
    VectorPoly<S> q = p;
    while (!q.is_zero()) {
        int m = height(q).value();
        S c = leading_expansion_coefficient(q) /
              leading_expansion_coefficient(g[static_cast<std::size_t>(m)]);
        d[static_cast<std::size_t>(m)] = c;
        q -= g[static_cast<std::size_t>(m)].scaled(c);
        invariant(height(q) < Height::of(m), "graded reduction failed to lower the height");
    }
    return d;
}

// The constant c with h(p + c q) <= m - 1 for h(p) = h(q) = m.
template <Scalar S>
S reduce_pair(const VectorPoly<S>& p, const VectorPoly<S>& q) {
    Height hp = height(p);
    Height hq = height(q);
    require(hp.is_finite() && hq.is_finite() && hp == hq,
            "reduce_pair requires equal finite heights");
    return -(leading_expansion_coefficient(p) / leading_expansion_coefficient(q));
}

} // namespace vpinterp
