#pragma once

#include <cstdint>

#include "marsrank/matrix.hpp"

namespace marsrank::scenarios {

inline constexpr std::size_t kDatasets = 40;

struct ScenarioSpec {
  int id = 1;
  std::uint64_t seed = 42;  // only scenario 6 draws random numbers
};

// Synthetic benchmarks over 40 datasets.
//
// 1-5 are two-block tables of three methods (A, B, C) and ignore the seed.
// 6 is eight methods (A..G, Baseline) at base accuracies
// 0.92, 0.90, 0.89, 0.85, 0.82, 0.78, 0.75, 0.60, plus a per-dataset shift
// g_d ~ N(0, 0.05) shared by all methods and a per-cell e ~ N(0, 0.02),
// drawn dataset-major (g_0, e_00..e_07, g_1, ...) from SplitMix64(seed) via
// the inverse normal CDF, then clamped to [0, 1].
PerformanceMatrix generate_scenario(const ScenarioSpec& spec);

inline constexpr double kScenario6DatasetSigma = 0.05;
inline constexpr double kScenario6MethodSigma = 0.02;

}  // namespace marsrank::scenarios
