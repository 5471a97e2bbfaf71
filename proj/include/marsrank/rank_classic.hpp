#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "marsrank/matrix.hpp"
#include "marsrank/stat_kernel.hpp"

namespace marsrank::classic {

// Fractional ranks, 1 = best. Ties share the mean of the positions they span.
std::vector<double> rank_row(std::span<const double> values);

// Per-dataset fractional ranks, row-major N x k.
struct RankMatrix {
  std::size_t datasets = 0;
  std::size_t methods = 0;
  std::vector<double> ranks;

  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(ranks).subspan(i * methods, methods);
  }
};

RankMatrix rank_matrix(const PerformanceMatrix& matrix);

// Column means R_j.
std::vector<double> average_ranks(const RankMatrix& ranks);

struct FriedmanResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  bool reject = false;
};

FriedmanResult friedman_test(std::span<const double> avg_ranks, std::size_t datasets,
                             Alpha alpha);

// q_alpha * sqrt(k(k+1) / (6N)).
double nemenyi_cd(std::size_t k, std::size_t datasets, Alpha alpha);

// Two-sided p-value of the paired signed-rank test, normal approximation.
// Zero differences are dropped, tied |d| share mean ranks, the variance is
// tie-corrected by sum(t^3 - t)/48, and W+ moves 0.5 toward its mean.
// Returns 1 when every difference is zero.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

struct PairwiseResult {
  std::size_t method_a = 0;
  std::size_t method_b = 0;
  double p_raw = 1.0;
  std::size_t holm_rank = 0;    // 1-based position in ascending p order
  double holm_threshold = 0.0;  // alpha / (m - rank + 1)
  bool rejected = false;

  friend bool operator==(const PairwiseResult&, const PairwiseResult&) = default;
};

struct HolmDecision {
  std::size_t holm_rank = 0;
  double threshold = 0.0;
  bool rejected = false;
};

// Step-down Holm. Output is in the input order.
std::vector<HolmDecision> holm_adjust(std::span<const double> p_values, Alpha alpha);

// Every pair (a < b) in lexicographic order, tested on the raw values and
// Holm-corrected as one family. Pairs run in parallel when OpenMP is enabled.
std::vector<PairwiseResult> pairwise_wilcoxon_holm(const PerformanceMatrix& matrix, Alpha alpha);

}  // namespace marsrank::classic
