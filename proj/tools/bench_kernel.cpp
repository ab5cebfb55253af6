// Benchmark: the elimination kernel with OpenMP row updates against the same
// kernel pinned to one thread, on exact constraint systems with distinct
// integer nodes. The independent serial reference from the test kit
// cross-checks the computed dimension.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "vpinterp/kernel.hpp"
#include "vpinterp/solver.hpp"
#include "vpinterp/testkit.hpp"

namespace {

using vpinterp::GaussianRational;

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

// Distinct integer nodes keep all N conditions alive through normalization.
vpinterp::Problem<GaussianRational> bench_problem(std::size_t n, std::size_t N, long bound,
                                                  std::uint64_t seed) {
    vpinterp::TestRng rng(seed);
    std::vector<vpinterp::Node<GaussianRational>> nodes;
    nodes.reserve(N);
    for (std::size_t j = 0; j < N; ++j) {
        vpinterp::Node<GaussianRational> node;
        node.z = GaussianRational(static_cast<long>(j) + 1);
        node.alpha.resize(n);
        for (auto& a : node.alpha) a = rng.scalar(bound);
        node.alpha[rng.below(n)] = rng.nonzero_scalar(bound);
        nodes.push_back(std::move(node));
    }
    return vpinterp::Problem<GaussianRational>::normalized(n, std::move(nodes));
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = 3;
    std::size_t N = 48;
    long bound = 6;
    std::uint64_t seed = 42;
    if (argc > 1) n = std::strtoul(argv[1], nullptr, 10);
    if (argc > 2) N = std::strtoul(argv[2], nullptr, 10);
    if (argc > 3) bound = std::strtol(argv[3], nullptr, 10);
    if (argc > 4) seed = std::strtoull(argv[4], nullptr, 10);

    auto prob = bench_problem(n, N, bound, seed);
    const int cap = vpinterp::module_cap(n, prob.node_count());
    auto constraints = vpinterp::constraint_matrix(prob, cap);
    std::printf("n=%zu N=%zu bound=%ld seed=%llu: constraint matrix %zu x %zu\n", n,
                prob.node_count(), bound, static_cast<unsigned long long>(seed),
                constraints.rows(), constraints.cols());

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#else
    const int max_threads = 1;
#endif
    double t0 = now();
    auto serial = vpinterp::kernel_graded(constraints);
    double t_serial = now() - t0;
    std::printf("kernel, 1 thread:   %8.3f s (dim %zu)\n", t_serial, serial.dim());

#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    t0 = now();
    auto parallel = vpinterp::kernel_graded(constraints);
    double t_parallel = now() - t0;
    std::printf("kernel, %d threads:  %8.3f s (dim %zu)\n", max_threads, t_parallel,
                parallel.dim());

    t0 = now();
    std::size_t oracle = vpinterp::oracle_dim(prob, cap);
    double t_oracle = now() - t0;
    std::printf("serial reference:   %8.3f s (dim %zu)\n", t_oracle, oracle);

    if (serial.dim() != oracle || parallel.dim() != oracle ||
        !(serial.vectors == parallel.vectors)) {
        std::printf("RESULT MISMATCH\n");
        return 2;
    }
    std::printf("parallel speedup: %.2fx over 1 thread\n", t_serial / t_parallel);
    return 0;
}
