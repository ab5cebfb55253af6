#include "vpinterp/rational.hpp"

#include <cctype>

namespace vpinterp {

namespace {

bool plausible_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool seen_digit = false;
    bool seen_slash = false;
    if (s[i] == '+' || s[i] == '-') ++i;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
            if (i + 1 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-')) ++i;
        } else {
            return false;
        }
    }
    return seen_digit;
}

} // namespace

mpq_class rational_from_string(const std::string& s) {
    if (!plausible_rational_literal(s))
        throw ValidationError("malformed rational literal: \"" + s + "\"");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw ValidationError("malformed rational literal: \"" + s + "\"");
    if (sgn(q.get_den()) == 0)
        throw ValidationError("zero denominator in rational literal: \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

GaussianRational GaussianRational::from_strings(const std::string& re, const std::string& im) {
    return {rational_from_string(re), rational_from_string(im)};
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string s;
    if (sgn(re_) != 0) s = re_.get_str();
    if (sgn(im_) > 0 && !s.empty()) s += "+";
    s += im_.get_str();
    s += "i";
    return s;
}

} // namespace vpinterp
