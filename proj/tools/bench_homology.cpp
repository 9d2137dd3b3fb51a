// Compares the serial and OpenMP Smith normal form kernels on the boundary
// matrices of the tree complexes, the dominant cost of the homology engine.

#include <benchmark/benchmark.h>

#include <map>

#include "coherence/snf.hpp"
#include "coherence/treespace.hpp"

namespace {

using coherence::linalg::Execution;
using coherence::linalg::IntMatrix;

const IntMatrix& top_boundary(unsigned n) {
    static std::map<unsigned, coherence::linalg::ChainComplexOverZ> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, coherence::lietree::relative_tree_complex(n)).first;
    return it->second.boundary(it->second.top_degree());
}

void snf_top_boundary(benchmark::State& state, Execution exec) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const IntMatrix& d = top_boundary(n);
    for (auto _ : state) {
        auto result = coherence::linalg::smith_normal_form(d, exec);
        benchmark::DoNotOptimize(result.divisors.data());
    }
    state.counters["rows"] = static_cast<double>(d.rows());
    state.counters["cols"] = static_cast<double>(d.cols());
}

void homology_full(benchmark::State& state, Execution exec) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto h = coherence::lietree::relative_homology_tree_pair(n, exec);
        benchmark::DoNotOptimize(h.size());
    }
}

}  // namespace

BENCHMARK_CAPTURE(snf_top_boundary, serial, Execution::Serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(snf_top_boundary, parallel, Execution::Parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homology_full, serial, Execution::Serial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(homology_full, parallel, Execution::Parallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
