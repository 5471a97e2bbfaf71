#include "marsrank/mars_core.hpp"

#include <algorithm>
#include <cmath>

#include "marsrank/rank_classic.hpp"

namespace marsrank::mars {

std::vector<double> weight_row(std::span<const double> values) {
  const auto [lo_it, hi_it] = std::ranges::minmax_element(values);
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<double> weights(values.size(), 1.0);
  if (hi == lo) return weights;

  const double range = hi - lo;
  std::vector<double> above;
  above.reserve(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] > lo) {
      weights[j] = range / (values[j] - lo);
      above.push_back(weights[j]);
    }
  }
  std::ranges::sort(above);

  double widest_gap = 0.0;
  for (std::size_t r = 1; r < above.size(); ++r) {
    widest_gap = std::max(widest_gap, above[r] - above[r - 1]);
  }
  // Covers both the single-survivor row and the all-equal-survivors row.
  const double penalty_step = widest_gap > 0.0 ? widest_gap : above.front();
  const double worst_weight = above.back() + penalty_step;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == lo) weights[j] = worst_weight;
  }
  return weights;
}

WeightedRankMatrix weighted_ranks(const PerformanceMatrix& matrix) {
  const std::size_t n = matrix.datasets();
  const std::size_t k = matrix.methods();
  WeightedRankMatrix out{n, k, {}, {}};
  out.weights.reserve(n * k);
  out.weighted_ranks.reserve(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = matrix.row(i);
    const auto ranks = classic::rank_row(row);
    const auto weights = weight_row(row);
    for (std::size_t j = 0; j < k; ++j) {
      out.weights.push_back(weights[j]);
      out.weighted_ranks.push_back(ranks[j] * weights[j]);
    }
  }
  return out;
}

MarsScores mars_scores(const WeightedRankMatrix& weighted) {
  MarsScores out;
  out.scores.assign(weighted.methods, 0.0);
  for (std::size_t i = 0; i < weighted.datasets; ++i) {
    for (std::size_t j = 0; j < weighted.methods; ++j) {
      out.scores[j] += weighted.weighted_ranks[i * weighted.methods + j];
    }
  }
  for (auto& s : out.scores) s /= static_cast<double>(weighted.datasets);
  return out;
}

void accumulate_scores(std::span<const double> values, std::size_t methods,
                       std::span<double> scores) {
  std::ranges::fill(scores, 0.0);
  const std::size_t n = values.size() / methods;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = values.subspan(i * methods, methods);
    const auto ranks = classic::rank_row(row);
    const auto weights = weight_row(row);
    for (std::size_t j = 0; j < methods; ++j) scores[j] += ranks[j] * weights[j];
  }
  for (auto& s : scores) s /= static_cast<double>(n);
}

double population_variance(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const auto [lo, hi] = std::ranges::minmax(xs);
  if (lo == hi) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(xs.size());
}

double population_stddev(std::span<const double> xs) { return std::sqrt(population_variance(xs)); }

double mars_sigma(const WeightedRankMatrix& weighted, std::span<const double> scores,
                  SigmaMode mode) {
  return mode == SigmaMode::Pooled ? population_stddev(weighted.weighted_ranks)
                                   : population_stddev(scores);
}

double mars_cd(std::size_t k, std::size_t datasets, Alpha alpha, double sigma) {
  const double kd = static_cast<double>(k);
  const double integer_rank_sd = std::sqrt((kd * kd - 1.0) / 12.0);
  return classic::nemenyi_cd(k, datasets, alpha) * sigma / integer_rank_sd;
}

MarsScores score_matrix(const PerformanceMatrix& matrix, Alpha alpha, SigmaMode mode) {
  const auto weighted = weighted_ranks(matrix);
  auto out = mars_scores(weighted);
  out.sigma = mars_sigma(weighted, out.scores, mode);
  out.cd = mars_cd(matrix.methods(), matrix.datasets(), alpha, out.sigma);
  return out;
}

}  // namespace marsrank::mars
