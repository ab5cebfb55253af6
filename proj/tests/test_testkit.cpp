#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vpinterp/serialize.hpp"
#include "vpinterp/solver.hpp"
#include "vpinterp/testkit.hpp"

using namespace vpinterp;
using namespace vpinterp::testing;

TEST_CASE("identical seeds reproduce identical problems") {
    ProblemSpecSeed spec{123456789, 3, 4, 10};
    Problem<Exact> a = random_problem(spec);
    Problem<Exact> b = random_problem(spec);
    REQUIRE(a.node_count() == b.node_count());
    for (std::size_t j = 0; j < a.node_count(); ++j) {
        CHECK(a.node(j).z == b.node(j).z);
        for (std::size_t k = 0; k < a.n(); ++k) CHECK(a.node(j).alpha[k] == b.node(j).alpha[k]);
    }
    ExactCodec codec;
    CHECK(problem_to_json(a, codec).dump() == problem_to_json(b, codec).dump());
}

TEST_CASE("different seeds give different problems") {
    Problem<Exact> a = random_problem({1, 3, 4, 10});
    Problem<Exact> b = random_problem({2, 3, 4, 10});
    ExactCodec codec;
    CHECK(problem_to_json(a, codec).dump() != problem_to_json(b, codec).dump());
}

TEST_CASE("requested shapes are honored") {
    Problem<Exact> empty = random_problem({7, 3, 0, 10});
    CHECK(empty.node_count() == 0);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Problem<Exact> p = random_problem({seed, 3, 4, 10});
        CHECK(p.n() == 3);
        CHECK(p.node_count() <= 4);
        for (const auto& nd : p.nodes()) {
            bool any = false;
            for (const auto& a : nd.alpha)
                if (!is_zero(a)) any = true;
            CHECK(any);
        }
    }
}

TEST_CASE("oracle dimension on fixtures") {
    Problem<Exact> e1 =
        normalize_problem<Exact>(2, {Node<Exact>{Exact{}, {Exact{1L}, Exact{1L}}}});
    CHECK(oracle_dim(e1, 2) == 2);
    CHECK(oracle_dim(e1, 0) == 0);
    Problem<Exact> empty(3);
    CHECK(oracle_dim(empty, 5) == 6);
}

TEST_CASE("oracle dimension agrees with the solver across sweeps") {
    TestRng rng(241);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + rng.below(5);
        ProblemSpecSeed spec{300000 + iter, n, rng.below(6), 8};
        Problem<Exact> prob = random_problem(spec);
        int m = static_cast<int>(rng.below(
            static_cast<std::uint64_t>(module_cap(n, prob.node_count())) + 2 * n + 1));
        CHECK(solution_dim(prob, m) == oracle_dim(prob, m));
    }
}

TEST_CASE("n=2 solutions reproduce linearized rational interpolation") {
    // distinct nodes, alpha(j) = (1, -f_j): any solution has P_1(z_j) = f_j P_2(z_j)
    TestRng rng(251);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t count = 1 + rng.below(4);
        std::vector<Node<Exact>> nodes;
        std::vector<Exact> zs;
        std::vector<Exact> fs;
        for (std::size_t j = 0; j < count; ++j) {
            Exact z{static_cast<long>(j) + 1};
            Exact f = rng.scalar(6);
            nodes.push_back({z, {Exact{1L}, -f}});
            zs.push_back(z);
            fs.push_back(f);
        }
        Problem<Exact> prob = normalize_problem<Exact>(2, std::move(nodes));
        GeneratorSet<Exact> gens = generators(prob);
        for (const auto& g : gens.generators)
            for (std::size_t j = 0; j < count; ++j)
                CHECK(g.entry(0).evaluate(zs[j]) == fs[j] * g.entry(1).evaluate(zs[j]));
    }
}
