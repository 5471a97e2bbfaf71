#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "marsrank/matrix.hpp"

namespace marsrank::mars {

struct PermutationResult {
  double observed_statistic = 0.0;  // population variance of the k MARS scores
  double p_value = 1.0;             // exceed_count / rho
  std::size_t exceed_count = 0;
  std::size_t rho = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultPermutations = 10000;

// Variance of the MARS scores of a row-major N x k value buffer. The scores
// are sorted before reduction so relabelling the methods never changes the
// result in the last bit.
double score_variance(std::span<const double> values, std::size_t methods);

// Global permutation test. Every row is shuffled independently for each of
// the rho permutations; permutation p draws from its own SplitMix64 stream
// (see rng.hpp), so the tally is identical for any thread count.
//
// threads <= 0 keeps the OpenMP default.
PermutationResult permutation_test(const PerformanceMatrix& matrix, std::size_t rho,
                                   std::uint64_t seed, int threads = 0);

// Single-threaded reference. Derives the per-permutation stream seeds by
// stepping the generator rather than by index arithmetic.
PermutationResult permutation_test_serial(const PerformanceMatrix& matrix, std::size_t rho,
                                          std::uint64_t seed);

}  // namespace marsrank::mars
