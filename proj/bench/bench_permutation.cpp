#include <benchmark/benchmark.h>

#include "marsrank/permutation.hpp"
#include "marsrank/scenarios.hpp"

#if defined(MARSRANK_HAVE_OPENMP)
#include <omp.h>
#endif

using namespace marsrank;

static void BM_PermutationSerial(benchmark::State& state) {
  const auto matrix = scenarios::generate_scenario({static_cast<int>(state.range(0)), 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(mars::permutation_test_serial(matrix, 10000, 42));
  }
}

static void BM_PermutationParallel(benchmark::State& state) {
  const auto matrix = scenarios::generate_scenario({static_cast<int>(state.range(0)), 1});
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mars::permutation_test(matrix, 10000, 42, threads));
  }
  state.counters["threads"] = threads;
}

// Scenario 1 (k = 3) and scenario 6 (k = 8), 40 datasets, rho = 10000.
BENCHMARK(BM_PermutationSerial)->Arg(1)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermutationParallel)
    ->ArgsProduct({{1, 6}, {1, 2, 4, 8}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
