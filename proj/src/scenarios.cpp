#include "marsrank/scenarios.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "marsrank/error.hpp"
#include "marsrank/rng.hpp"
#include "marsrank/stat_kernel.hpp"

namespace marsrank::scenarios {
namespace {

struct BlockTable {
  std::size_t split;  // datasets [0, split) use `first`, the rest `second`
  std::array<double, 3> first;
  std::array<double, 3> second;
};

// Columns A, B, C.
constexpr std::array<BlockTable, 5> kTables = {{
    {20, {0.95, 0.50, 0.30}, {0.94, 0.95, 0.30}},
    {30, {0.81, 0.80, 0.20}, {0.10, 0.95, 0.08}},
    {20, {0.70, 0.90, 0.50}, {0.70, 0.10, 0.50}},
    {30, {0.8499, 0.8500, 0.7500}, {0.90, 0.15, 0.75}},
    {30, {0.950, 0.951, 0.952}, {0.940, 0.400, 0.350}},
}};

constexpr std::array<double, 8> kScenario6Base = {0.92, 0.90, 0.89, 0.85, 0.82, 0.78, 0.75, 0.60};

std::vector<std::string> dataset_names() {
  std::vector<std::string> names;
  for (std::size_t d = 0; d < kDatasets; ++d) names.push_back("D" + std::to_string(d));
  return names;
}

PerformanceMatrix block_scenario(const BlockTable& table) {
  std::vector<double> values;
  values.reserve(kDatasets * 3);
  for (std::size_t d = 0; d < kDatasets; ++d) {
    const auto& row = d < table.split ? table.first : table.second;
    values.insert(values.end(), row.begin(), row.end());
  }
  return PerformanceMatrix({"A", "B", "C"}, dataset_names(), std::move(values));
}

PerformanceMatrix noisy_scenario(std::uint64_t seed) {
  rng::SplitMix64 gen(seed);
  const auto gaussian = [&](double sigma) { return sigma * stats::inverse_normal_cdf(gen.open_unit()); };

  std::vector<double> values;
  values.reserve(kDatasets * kScenario6Base.size());
  for (std::size_t d = 0; d < kDatasets; ++d) {
    const double shift = gaussian(kScenario6DatasetSigma);
    for (double base : kScenario6Base) {
      values.push_back(std::clamp(base + shift + gaussian(kScenario6MethodSigma), 0.0, 1.0));
    }
  }
  return PerformanceMatrix({"A", "B", "C", "D", "E", "F", "G", "Baseline"}, dataset_names(),
                           std::move(values));
}

}  // namespace

PerformanceMatrix generate_scenario(const ScenarioSpec& spec) {
  if (spec.id >= 1 && spec.id <= 5) return block_scenario(kTables[static_cast<std::size_t>(spec.id - 1)]);
  if (spec.id == 6) return noisy_scenario(spec.seed);
  throw Error(ErrorCode::UnknownScenario,
              "scenario id must be 1..6, got " + std::to_string(spec.id));
}

}  // namespace marsrank::scenarios
