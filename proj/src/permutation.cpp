#include "marsrank/permutation.hpp"

#include <algorithm>
#include <vector>

#include "marsrank/error.hpp"
#include "marsrank/mars_core.hpp"
#include "marsrank/rng.hpp"

#if defined(MARSRANK_HAVE_OPENMP)
#include <omp.h>
#endif

namespace marsrank::mars {
namespace {

struct Scratch {
  std::vector<double> values;
  std::vector<double> scores;
};

double null_statistic(std::span<const double> original, std::size_t methods,
                      std::uint64_t stream, Scratch& scratch) {
  scratch.values.assign(original.begin(), original.end());
  rng::SplitMix64 gen(stream);
  const std::size_t n = original.size() / methods;
  for (std::size_t i = 0; i < n; ++i) {
    rng::shuffle(std::span<double>(scratch.values).subspan(i * methods, methods), gen);
  }
  return score_variance(scratch.values, methods);
}

void require_rho(std::size_t rho) {
  if (rho == 0) throw Error(ErrorCode::DomainError, "permutation count must be >= 1");
}

PermutationResult finish(double observed, std::size_t count, std::size_t rho, std::uint64_t seed) {
  return {observed, static_cast<double>(count) / static_cast<double>(rho), count, rho, seed};
}

}  // namespace

double score_variance(std::span<const double> values, std::size_t methods) {
  std::vector<double> scores(methods);
  accumulate_scores(values, methods, scores);
  std::ranges::sort(scores);
  return population_variance(scores);
}

PermutationResult permutation_test(const PerformanceMatrix& matrix, std::size_t rho,
                                   std::uint64_t seed, int threads) {
  require_rho(rho);
  const std::size_t k = matrix.methods();
  const auto values = matrix.values();
  const double observed = score_variance(values, k);

  std::size_t count = 0;
  const auto total = static_cast<std::ptrdiff_t>(rho);
#if defined(MARSRANK_HAVE_OPENMP)
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(team) reduction(+ : count)
  {
    Scratch scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t p = 0; p < total; ++p) {
      const auto stream = rng::stream_seed(seed, static_cast<std::uint64_t>(p));
      if (null_statistic(values, k, stream, scratch) >= observed) ++count;
    }
  }
#else
  (void)threads;
  Scratch scratch;
  for (std::ptrdiff_t p = 0; p < total; ++p) {
    const auto stream = rng::stream_seed(seed, static_cast<std::uint64_t>(p));
    if (null_statistic(values, k, stream, scratch) >= observed) ++count;
  }
#endif
  return finish(observed, count, rho, seed);
}

PermutationResult permutation_test_serial(const PerformanceMatrix& matrix, std::size_t rho,
                                          std::uint64_t seed) {
  require_rho(rho);
  const std::size_t k = matrix.methods();
  const auto values = matrix.values();
  const double observed = score_variance(values, k);

  rng::SplitMix64 seeds(seed);
  Scratch scratch;
  std::size_t count = 0;
  for (std::size_t p = 0; p < rho; ++p) {
    if (null_statistic(values, k, seeds.next(), scratch) >= observed) ++count;
  }
  return finish(observed, count, rho, seed);
}

}  // namespace marsrank::mars
