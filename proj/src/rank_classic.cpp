#include "marsrank/rank_classic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "marsrank/error.hpp"

namespace marsrank::classic {

std::vector<double> rank_row(std::span<const double> values) {
  const std::size_t k = values.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  std::vector<double> ranks(k);
  for (std::size_t start = 0; start < k;) {
    std::size_t end = start + 1;
    while (end < k && values[order[end]] == values[order[start]]) ++end;
    // positions start..end-1 hold ranks start+1..end
    const double shared = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t p = start; p < end; ++p) ranks[order[p]] = shared;
    start = end;
  }
  return ranks;
}

RankMatrix rank_matrix(const PerformanceMatrix& matrix) {
  RankMatrix out{matrix.datasets(), matrix.methods(), {}};
  out.ranks.reserve(matrix.values().size());
  for (std::size_t i = 0; i < matrix.datasets(); ++i) {
    const auto row = rank_row(matrix.row(i));
    out.ranks.insert(out.ranks.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<double> average_ranks(const RankMatrix& ranks) {
  std::vector<double> avg(ranks.methods, 0.0);
  for (std::size_t i = 0; i < ranks.datasets; ++i) {
    const auto row = ranks.row(i);
    for (std::size_t j = 0; j < ranks.methods; ++j) avg[j] += row[j];
  }
  for (auto& r : avg) r /= static_cast<double>(ranks.datasets);
  return avg;
}

FriedmanResult friedman_test(std::span<const double> avg_ranks, std::size_t datasets,
                             Alpha alpha) {
  const std::size_t k = avg_ranks.size();
  if (k < 2) throw Error(ErrorCode::DegenerateInput, "Friedman test needs k >= 2");
  if (datasets < 1) throw Error(ErrorCode::DegenerateInput, "Friedman test needs N >= 1");

  const double kd = static_cast<double>(k);
  const double n = static_cast<double>(datasets);
  double sum_sq = 0.0;
  for (double r : avg_ranks) sum_sq += r * r;
  // Rounding can push an exact-null statistic a hair below zero.
  const double stat =
      std::max(0.0, 12.0 * n / (kd * (kd + 1.0)) * (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0));

  FriedmanResult result;
  result.statistic = stat;
  result.df = static_cast<int>(k) - 1;
  result.p_value = stats::chi2_sf(stat, result.df);
  result.reject = result.p_value < alpha.value();
  return result;
}

double nemenyi_cd(std::size_t k, std::size_t datasets, Alpha alpha) {
  const double kd = static_cast<double>(k);
  return stats::nemenyi_q(k, alpha) * std::sqrt(kd * (kd + 1.0) / (6.0 * static_cast<double>(datasets)));
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DegenerateInput, "signed-rank test needs paired samples of equal length");
  }
  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) diffs.push_back(d);
  }
  const std::size_t n = diffs.size();
  if (n == 0) return 1.0;

  std::vector<double> neg_abs(n);
  std::ranges::transform(diffs, neg_abs.begin(), [](double d) { return -std::fabs(d); });
  // rank_row ranks larger values first; negating |d| yields ascending-|d| ranks.
  const auto ranks = rank_row(neg_abs);

  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (diffs[i] > 0.0) w_plus += ranks[i];
  }

  std::vector<double> sorted_abs(n);
  std::ranges::transform(neg_abs, sorted_abs.begin(), [](double v) { return -v; });
  std::ranges::sort(sorted_abs);
  double tie_term = 0.0;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && sorted_abs[end] == sorted_abs[start]) ++end;
    const double t = static_cast<double>(end - start);
    tie_term += t * t * t - t;
    start = end;
  }

  const double nd = static_cast<double>(n);
  const double mean = nd * (nd + 1.0) / 4.0;
  const double variance = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
  if (variance <= 0.0) return 1.0;

  const double deviation = std::max(std::fabs(w_plus - mean) - 0.5, 0.0);
  const double z = deviation / std::sqrt(variance);
  return std::min(1.0, 2.0 * stats::normal_sf(z));
}

std::vector<HolmDecision> holm_adjust(std::span<const double> p_values, Alpha alpha) {
  const std::size_t m = p_values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });

  std::vector<HolmDecision> out(m);
  bool still_rejecting = true;
  for (std::size_t pos = 0; pos < m; ++pos) {
    auto& decision = out[order[pos]];
    decision.holm_rank = pos + 1;
    decision.threshold = alpha.value() / static_cast<double>(m - pos);
    still_rejecting = still_rejecting && p_values[order[pos]] <= decision.threshold;
    decision.rejected = still_rejecting;
  }
  return out;
}

std::vector<PairwiseResult> pairwise_wilcoxon_holm(const PerformanceMatrix& matrix, Alpha alpha) {
  const std::size_t k = matrix.methods();
  std::vector<PairwiseResult> pairs;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) pairs.push_back({a, b});
  }
  std::vector<std::vector<double>> columns(k);
  for (std::size_t j = 0; j < k; ++j) columns[j] = matrix.column(j);

  const auto m = static_cast<std::ptrdiff_t>(pairs.size());
#if defined(MARSRANK_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    auto& pair = pairs[static_cast<std::size_t>(i)];
    pair.p_raw = wilcoxon_signed_rank(columns[pair.method_a], columns[pair.method_b]);
  }

  std::vector<double> p(pairs.size());
  std::ranges::transform(pairs, p.begin(), &PairwiseResult::p_raw);
  const auto decisions = holm_adjust(p, alpha);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].holm_rank = decisions[i].holm_rank;
    pairs[i].holm_threshold = decisions[i].threshold;
    pairs[i].rejected = decisions[i].rejected;
  }
  return pairs;
}

}  // namespace marsrank::classic
