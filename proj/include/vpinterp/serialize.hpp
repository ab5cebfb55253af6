#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vpinterp/approx.hpp"
#include "vpinterp/problem.hpp"
#include "vpinterp/rational.hpp"
#include "vpinterp/solver.hpp"

namespace vpinterp {

using ordered_json = nlohmann::ordered_json;

// Scalars travel as {"re":"p/q","im":"r/s"} with decimal integer strings;
// integral values are written without the "/1". The approximate backend
// additionally accepts decimal floating literals and round-trips doubles
// through shortest-exact formatting.
struct ExactCodec {
    using scalar_type = GaussianRational;
    GaussianRational read(const ordered_json& j) const;
    ordered_json write(const GaussianRational& v) const;
};

struct ApproxCodec {
    using scalar_type = ApproxComplex;
    double zero_tol = 1e-9;
    ApproxComplex read(const ordered_json& j) const;
    ordered_json write(const ApproxComplex& v) const;
};

template <class Codec>
ScalarPoly<typename Codec::scalar_type> scalar_poly_from_json(const ordered_json& j,
                                                              const Codec& codec) {
    require(j.is_array(), "polynomial must be an array of scalars (constant term first)");
    std::vector<typename Codec::scalar_type> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(codec.read(c));
    return ScalarPoly<typename Codec::scalar_type>(std::move(coeffs));
}

template <class Codec>
ordered_json scalar_poly_to_json(const ScalarPoly<typename Codec::scalar_type>& p,
                                 const Codec& codec) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(codec.write(c));
    return arr;
}

// {"n":2,"entries":[[c0,c1,...],...]}
template <class Codec>
VectorPoly<typename Codec::scalar_type> vector_poly_from_json(const ordered_json& j,
                                                              const Codec& codec) {
    require(j.is_object() && j.contains("n") && j.contains("entries"),
            "vector polynomial must be {\"n\":...,\"entries\":[...]}");
    require(j["n"].is_number_unsigned() && j["n"].get<std::size_t>() >= 1,
            "\"n\" must be a positive integer");
    std::size_t n = j["n"].get<std::size_t>();
    require(j["entries"].is_array() && j["entries"].size() == n,
            "\"entries\" must hold exactly n polynomials");
    std::vector<ScalarPoly<typename Codec::scalar_type>> entries;
    entries.reserve(n);
    for (const auto& e : j["entries"]) entries.push_back(scalar_poly_from_json(e, codec));
    return VectorPoly<typename Codec::scalar_type>(n, std::move(entries));
}

template <class Codec>
ordered_json vector_poly_to_json(const VectorPoly<typename Codec::scalar_type>& p,
                                 const Codec& codec) {
    ordered_json j;
    j["n"] = p.n();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < p.n(); ++i) entries.push_back(scalar_poly_to_json(p.entry(i), codec));
    j["entries"] = std::move(entries);
    return j;
}

// {"n":2,"nodes":[{"z":{...},"alpha":[{...},...]},...]}; normalization runs
// on load and the report is surfaced to the caller.
template <class Codec>
Problem<typename Codec::scalar_type> problem_from_json(const ordered_json& j, const Codec& codec,
                                                       NormalizeReport* report = nullptr) {
    using S = typename Codec::scalar_type;
    require(j.is_object() && j.contains("n") && j.contains("nodes"),
            "problem must be {\"n\":...,\"nodes\":[...]}");
    require(j["n"].is_number_unsigned() && j["n"].get<std::size_t>() >= 1,
            "\"n\" must be a positive integer");
    std::size_t n = j["n"].get<std::size_t>();
    require(j["nodes"].is_array(), "\"nodes\" must be an array");
    std::vector<Node<S>> nodes;
    nodes.reserve(j["nodes"].size());
    std::size_t index = 0;
    for (const auto& nj : j["nodes"]) {
        ++index;
        require(nj.is_object() && nj.contains("z") && nj.contains("alpha"),
                "node " + std::to_string(index) + " must be {\"z\":...,\"alpha\":[...]}");
        Node<S> node;
        node.z = codec.read(nj["z"]);
        require(nj["alpha"].is_array() && nj["alpha"].size() == n,
                "node " + std::to_string(index) + ": \"alpha\" must hold exactly n scalars");
        for (const auto& a : nj["alpha"]) node.alpha.push_back(codec.read(a));
        nodes.push_back(std::move(node));
    }
    return Problem<S>::normalized(n, std::move(nodes), report);
}

template <class Codec>
ordered_json problem_to_json(const Problem<typename Codec::scalar_type>& prob,
                             const Codec& codec) {
    ordered_json j;
    j["n"] = prob.n();
    ordered_json nodes = ordered_json::array();
    for (const auto& node : prob.nodes()) {
        ordered_json nj;
        nj["z"] = codec.write(node.z);
        ordered_json alpha = ordered_json::array();
        for (const auto& a : node.alpha) alpha.push_back(codec.write(a));
        nj["alpha"] = std::move(alpha);
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

// {"generators":[...],"heights":[...],"height_sum":...,"N":...,"n":...}
template <class Codec>
ordered_json generator_set_to_json(const GeneratorSet<typename Codec::scalar_type>& gens,
                                   const Codec& codec) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& g : gens.generators) arr.push_back(vector_poly_to_json(g, codec));
    j["generators"] = std::move(arr);
    j["heights"] = gens.heights;
    j["height_sum"] = gens.height_sum();
    j["N"] = gens.node_count;
    j["n"] = gens.n;
    return j;
}

} // namespace vpinterp
