// Command-line front end: loads interpolation problems as JSON and emits
// generators, bounded-height solutions, decompositions, membership checks,
// truncated dimensions, and the randomized self-test report.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vpinterp/serialize.hpp"
#include "vpinterp/solver.hpp"
#include "vpinterp/testkit.hpp"
#include "vpinterp/verify.hpp"

namespace {

using vpinterp::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInternal = 2;

struct IoOptions {
    std::string input = "-";
    std::string output = "-";
    std::string backend = "exact";
    double tol = 1e-9;
};

struct RangeOption {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

RangeOption parse_range(const std::string& text) {
    auto dots = text.find("..");
    vpinterp::require(dots != std::string::npos,
                      "range must look like a..b, got \"" + text + "\"");
    RangeOption r;
    try {
        r.lo = std::stoul(text.substr(0, dots));
        r.hi = std::stoul(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw vpinterp::ValidationError("range must look like a..b, got \"" + text + "\"");
    }
    vpinterp::require(r.lo <= r.hi, "empty range \"" + text + "\"");
    return r;
}

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    vpinterp::require(in.good(), "cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_all(const std::string& path, const ordered_json& j) {
    std::string text = j.dump(2);
    text += '\n';
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    vpinterp::require(out.good(), "cannot open output file: " + path);
    out << text;
}

// nlohmann reports byte offsets; translate to a line/column diagnostic.
ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw vpinterp::ValidationError("malformed JSON in " + what + " at line " +
                                        std::to_string(line) + ", column " + std::to_string(col) +
                                        ": " + e.what());
    }
}

ordered_json normalize_warnings(const vpinterp::NormalizeReport& rep) {
    ordered_json w = ordered_json::array();
    if (rep.collapsed > 0)
        w.push_back("dropped " + std::to_string(rep.collapsed) +
                     " redundant condition(s) at coinciding nodes");
    if (!rep.crowded_input.empty()) {
        std::string msg = "more than n conditions share a node point (input indices:";
        for (std::size_t i : rep.crowded_input) msg += " " + std::to_string(i + 1);
        msg += ")";
        w.push_back(msg);
    }
    return w;
}

template <class Codec>
int cmd_generators(const IoOptions& io, const Codec& codec) {
    vpinterp::NormalizeReport rep;
    auto prob = vpinterp::problem_from_json(parse_json(read_all(io.input), "problem"), codec, &rep);
    auto gens = vpinterp::generators(prob);
    ordered_json out = vpinterp::generator_set_to_json(gens, codec);

    ordered_json cert;
    ordered_json residues = ordered_json::array();
    for (int h : gens.heights) residues.push_back(h % static_cast<int>(gens.n));
    cert["residues"] = std::move(residues);
    auto det = vpinterp::generator_determinant(gens);
    cert["det_degree"] = det.is_zero() ? -1 : det.degree();
    bool vanishes = true;
    for (const auto& node : prob.nodes())
        if (!is_zero(det.evaluate(node.z))) vanishes = false;
    cert["det_vanishes_at_nodes"] = vanishes;
    cert["det"] = vpinterp::scalar_poly_to_json(det, codec);
    out["certificate"] = std::move(cert);
    if (!rep.clean()) out["warnings"] = normalize_warnings(rep);
    write_all(io.output, out);
    return kExitOk;
}

template <class Codec>
int cmd_solve(const IoOptions& io, const Codec& codec) {
    auto prob = vpinterp::problem_from_json(parse_json(read_all(io.input), "problem"), codec);
    auto r = vpinterp::constructive_solution(prob);
    write_all(io.output, vpinterp::vector_poly_to_json(r, codec));
    return kExitOk;
}

template <class Codec>
int cmd_check(const IoOptions& io, const std::string& poly_path, const Codec& codec) {
    auto prob = vpinterp::problem_from_json(parse_json(read_all(io.input), "problem"), codec);
    auto poly = vpinterp::vector_poly_from_json(parse_json(read_all(poly_path), "polynomial"),
                                                codec);
    ordered_json out;
    out["solution"] = vpinterp::check_solution(poly, prob);
    write_all(io.output, out);
    return kExitOk;
}

template <class Codec>
int cmd_decompose(const IoOptions& io, const std::string& poly_path, const Codec& codec) {
    auto prob = vpinterp::problem_from_json(parse_json(read_all(io.input), "problem"), codec);
    auto poly = vpinterp::vector_poly_from_json(parse_json(read_all(poly_path), "polynomial"),
                                                codec);
    auto gens = vpinterp::generators(prob);
    ordered_json out;
    try {
        auto coeffs = vpinterp::decompose(poly, gens);
        out["in_module"] = true;
        ordered_json arr = ordered_json::array();
        for (const auto& s : coeffs) arr.push_back(vpinterp::scalar_poly_to_json(s, codec));
        out["coefficients"] = std::move(arr);
    } catch (const vpinterp::NotInModuleError& e) {
        out["in_module"] = false;
        out["error"] = e.what();
        write_all(io.output, out);
        return kExitValidation;
    }
    write_all(io.output, out);
    return kExitOk;
}

template <class Codec>
int cmd_dim(const IoOptions& io, int cap, const Codec& codec) {
    auto prob = vpinterp::problem_from_json(parse_json(read_all(io.input), "problem"), codec);
    ordered_json out;
    out["cap"] = cap;
    out["dim"] = vpinterp::solution_dim(prob, cap);
    write_all(io.output, out);
    return kExitOk;
}

int cmd_selftest(const IoOptions& io, std::size_t seeds, RangeOption n_range, RangeOption N_range) {
    vpinterp::require(io.backend == "exact", "selftest runs on the exact backend");
    vpinterp::require(n_range.lo >= 1, "selftest needs n >= 1");
    vpinterp::require(seeds >= 1, "selftest needs at least one seed");

    struct Case {
        std::size_t n;
        std::size_t N;
        std::uint64_t seed;
    };
    std::vector<Case> cases;
    for (std::size_t n = n_range.lo; n <= n_range.hi; ++n)
        for (std::size_t N = N_range.lo; N <= N_range.hi; ++N)
            for (std::size_t s = 0; s < seeds; ++s)
                cases.push_back({n, N, 1000003u * n + 10007u * N + s});

    std::vector<ordered_json> entries(cases.size());
    std::vector<bool> ok(cases.size(), false);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(cases.size()); ++i) {
        const Case& c = cases[static_cast<std::size_t>(i)];
        ordered_json entry;
        entry["n"] = c.n;
        entry["N"] = c.N;
        entry["seed"] = c.seed;
        try {
            auto prob = vpinterp::random_problem({c.seed, c.n, c.N, 10});
            auto checks = vpinterp::run_problem_checks(prob, c.seed ^ 0x5eedf00dULL);
            ok[static_cast<std::size_t>(i)] = checks.all_ok();
            entry["ok"] = checks.all_ok();
            if (!checks.all_ok()) entry["failures"] = checks.failures;
        } catch (const std::exception& e) {
            entry["ok"] = false;
            entry["failures"] = ordered_json::array({e.what()});
        }
        entries[static_cast<std::size_t>(i)] = std::move(entry);
    }

    std::vector<std::string> lemma_failures = vpinterp::run_lemma_suite(0xa11ce, 200);

    ordered_json report;
    report["lemma_suite"] = ordered_json::object();
    report["lemma_suite"]["cases"] = 200;
    report["lemma_suite"]["ok"] = lemma_failures.empty();
    if (!lemma_failures.empty()) report["lemma_suite"]["failures"] = lemma_failures;
    ordered_json arr = ordered_json::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (ok[i]) ++passed;
        arr.push_back(std::move(entries[i]));
    }
    report["problem_cases"] = std::move(arr);
    report["passed"] = passed;
    report["failed"] = entries.size() - passed;
    bool all_ok = lemma_failures.empty() && passed == entries.size();
    report["ok"] = all_ok;
    write_all(io.output, report);
    return all_ok ? kExitOk : kExitValidation;
}

template <class Fn>
int dispatch_backend(const IoOptions& io, Fn&& fn) {
    if (io.backend == "exact") return fn(vpinterp::ExactCodec{});
    if (io.backend == "approx") {
        vpinterp::require(io.tol > 0.0, "approximate backend requires --tol > 0");
        return fn(vpinterp::ApproxCodec{io.tol});
    }
    throw vpinterp::ValidationError("unknown backend: " + io.backend);
}

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_backend = true) {
    cmd->add_option("--input", io.input, "problem JSON file, or - for stdin");
    cmd->add_option("--output", io.output, "output file, or - for stdout");
    if (with_backend) {
        cmd->add_option("--backend", io.backend, "coefficient backend")
            ->check(CLI::IsMember({"exact", "approx"}));
        cmd->add_option("--tol", io.tol, "zero tolerance for the approximate backend");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for the vector-polynomial linear interpolation problem"};
    app.require_subcommand(1);

    IoOptions io;
    std::string poly_path;
    int cap = -1;
    std::size_t seeds = 3;
    std::string n_range_text = "2..4";
    std::string N_range_text = "0..5";

    CLI::App* c_generators =
        app.add_subcommand("generators", "compute the n generators and the certificate");
    add_io_options(c_generators, io);

    CLI::App* c_solve =
        app.add_subcommand("solve", "compute a solution of height at most N");
    add_io_options(c_solve, io);

    CLI::App* c_check = app.add_subcommand("check", "test whether a vector polynomial solves");
    add_io_options(c_check, io);
    c_check->add_option("--poly", poly_path, "vector polynomial JSON file")->required();

    CLI::App* c_decompose =
        app.add_subcommand("decompose", "write a solution as sum_j S_j r_j");
    add_io_options(c_decompose, io);
    c_decompose->add_option("--poly", poly_path, "vector polynomial JSON file")->required();

    CLI::App* c_dim = app.add_subcommand("dim", "dimension of solutions up to a height cap");
    add_io_options(c_dim, io);
    c_dim->add_option("--cap", cap, "height cap (>= 0)")->required();

    CLI::App* c_selftest =
        app.add_subcommand("selftest", "randomized verification sweeps (exact backend)");
    add_io_options(c_selftest, io);
    c_selftest->add_option("--seeds", seeds, "seeds per (n, N) grid point");
    c_selftest->add_option("--n-range", n_range_text, "dimension range a..b");
    c_selftest->add_option("--N-range", N_range_text, "node count range a..b");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_generators->parsed())
            return dispatch_backend(io, [&](const auto& codec) { return cmd_generators(io, codec); });
        if (c_solve->parsed())
            return dispatch_backend(io, [&](const auto& codec) { return cmd_solve(io, codec); });
        if (c_check->parsed())
            return dispatch_backend(
                io, [&](const auto& codec) { return cmd_check(io, poly_path, codec); });
        if (c_decompose->parsed())
            return dispatch_backend(
                io, [&](const auto& codec) { return cmd_decompose(io, poly_path, codec); });
        if (c_dim->parsed()) {
            vpinterp::require(cap >= 0, "--cap must be nonnegative");
            return dispatch_backend(io, [&](const auto& codec) { return cmd_dim(io, cap, codec); });
        }
        if (c_selftest->parsed())
            return cmd_selftest(io, seeds, parse_range(n_range_text), parse_range(N_range_text));
    } catch (const vpinterp::InternalInvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const vpinterp::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitValidation;
}
