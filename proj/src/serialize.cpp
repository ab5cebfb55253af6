#include "vpinterp/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace vpinterp {

namespace {

std::string field_string(const ordered_json& j, const char* key) {
    require(j.is_object() && j.contains("re") && j.contains("im"),
            "scalar must be {\"re\":...,\"im\":...}");
    const auto& v = j[key];
    require(v.is_string(), std::string("scalar field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

double approx_component(const std::string& s) {
    // Rational literals keep exactness until the final division; plain
    // decimal/scientific literals are accepted as well.
    if (s.find('/') != std::string::npos) {
        mpq_class q = rational_from_string(s);
        return q.get_d();
    }
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    require(end != nullptr && *end == '\0' && end != s.c_str(),
            "malformed numeric literal: \"" + s + "\"");
    return v;
}

std::string shortest_double(double v) {
    if (v == 0.0) return "0"; // merge the signed zeros
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = std::strtod(buf, nullptr);
    if (back == v) {
        // Try shorter forms first so common values stay readable.
        for (int prec = 1; prec <= 16; ++prec) {
            char probe[40];
            std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
            if (std::strtod(probe, nullptr) == v) return probe;
        }
    }
    return buf;
}

} // namespace

GaussianRational ExactCodec::read(const ordered_json& j) const {
    return GaussianRational::from_strings(field_string(j, "re"), field_string(j, "im"));
}

ordered_json ExactCodec::write(const GaussianRational& v) const {
    ordered_json j;
    j["re"] = rational_to_string(v.real());
    j["im"] = rational_to_string(v.imag());
    return j;
}

ApproxComplex ApproxCodec::read(const ordered_json& j) const {
    return {approx_component(field_string(j, "re")), approx_component(field_string(j, "im")),
            zero_tol};
}

ordered_json ApproxCodec::write(const ApproxComplex& v) const {
    ordered_json j;
    j["re"] = shortest_double(v.real());
    j["im"] = shortest_double(v.imag());
    return j;
}

} // namespace vpinterp
