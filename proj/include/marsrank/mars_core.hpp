#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "marsrank/matrix.hpp"
#include "marsrank/stat_kernel.hpp"

namespace marsrank::mars {

// Margin weights for one dataset (higher is better).
//
// Methods above the row minimum get (max - min) / (y - min), so the best
// method weighs exactly 1. Methods tied at the minimum get the largest
// above-minimum weight plus the widest gap between consecutive sorted
// above-minimum weights. When there is a single above-minimum method, or all
// of them share one weight, the gap falls back to the smallest weight.
// A row with no spread at all weighs 1 everywhere.
std::vector<double> weight_row(std::span<const double> values);

// Row-major N x k weights and rank * weight products.
struct WeightedRankMatrix {
  std::size_t datasets = 0;
  std::size_t methods = 0;
  std::vector<double> weights;
  std::vector<double> weighted_ranks;
};

struct MarsScores {
  std::vector<double> scores;  // column means of weighted ranks, >= 1, lower is better
  double sigma = 0.0;
  double cd = 0.0;
};

enum class SigmaMode {
  Pooled,        // population std over all N*k weighted-rank entries
  MethodScores,  // population std over the k mean scores
};

WeightedRankMatrix weighted_ranks(const PerformanceMatrix& matrix);

// Scores only; sigma and cd are left at zero.
MarsScores mars_scores(const WeightedRankMatrix& weighted);

// Computes scores for one row-major value buffer without materialising the
// weighted matrix. Shared by the permutation kernels.
void accumulate_scores(std::span<const double> values, std::size_t methods,
                       std::span<double> scores);

double population_variance(std::span<const double> xs);
double population_stddev(std::span<const double> xs);

double mars_sigma(const WeightedRankMatrix& weighted, std::span<const double> scores,
                  SigmaMode mode);

// Nemenyi CD scaled by sigma / sqrt((k^2 - 1) / 12).
double mars_cd(std::size_t k, std::size_t datasets, Alpha alpha, double sigma);

// Weighted ranks, scores, sigma and CD in one go.
MarsScores score_matrix(const PerformanceMatrix& matrix, Alpha alpha, SigmaMode mode);

}  // namespace marsrank::mars
