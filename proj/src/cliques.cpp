#include "marsrank/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace marsrank::diagram {
namespace {

void canonicalize(CliqueSet& set) {
  for (auto& clique : set.cliques) std::ranges::sort(clique);
  std::ranges::sort(set.cliques);
}

CliqueSet with_axis(std::span<const double> scores) {
  CliqueSet set;
  if (!scores.empty()) std::tie(set.axis_min, set.axis_max) = axis_bounds(scores);
  return set;
}

using Bits = std::vector<bool>;

void bron_kerbosch(const RejectionMatrix& rejected, std::vector<std::size_t>& current,
                   Bits candidates, Bits excluded, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t k = rejected.size();
  const auto connected = [&](std::size_t a, std::size_t b) {
    return a != b && !rejected.rejected(a, b);
  };
  const bool any_candidate = std::ranges::find(candidates, true) != candidates.end();
  const bool any_excluded = std::ranges::find(excluded, true) != excluded.end();
  if (!any_candidate) {
    if (!any_excluded && current.size() >= 2) out.push_back(current);
    return;
  }

  // Pivot: the vertex in P u X with the most neighbours in P.
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (std::size_t u = 0; u < k; ++u) {
    if (!candidates[u] && !excluded[u]) continue;
    std::size_t degree = 0;
    for (std::size_t v = 0; v < k; ++v) degree += candidates[v] && connected(u, v);
    if (!have_pivot || degree > best) {
      pivot = u;
      best = degree;
      have_pivot = true;
    }
  }

  for (std::size_t v = 0; v < k; ++v) {
    if (!candidates[v] || connected(pivot, v)) continue;
    Bits next_candidates(k, false);
    Bits next_excluded(k, false);
    for (std::size_t u = 0; u < k; ++u) {
      next_candidates[u] = candidates[u] && connected(v, u);
      next_excluded[u] = excluded[u] && connected(v, u);
    }
    current.push_back(v);
    bron_kerbosch(rejected, current, std::move(next_candidates), std::move(next_excluded), out);
    current.pop_back();
    candidates[v] = false;
    excluded[v] = true;
  }
}

}  // namespace

std::pair<double, double> axis_bounds(std::span<const double> scores) {
  const auto [lo, hi] = std::ranges::minmax(scores);
  return {std::floor(lo), std::ceil(hi)};
}

CliqueSet cliques_from_threshold(std::span<const double> scores, double cd) {
  auto set = with_axis(scores);
  const std::size_t k = scores.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  std::size_t previous_end = 0;
  for (std::size_t start = 0; start < k; ++start) {
    std::size_t end = start + 1;
    while (end < k && std::fabs(scores[order[end]] - scores[order[start]]) < cd) ++end;
    // end never decreases, so a window is maximal iff it reaches further than its predecessor.
    if (end - start >= 2 && end > previous_end) {
      set.cliques.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                               order.begin() + static_cast<std::ptrdiff_t>(end));
    }
    previous_end = std::max(previous_end, end);
  }
  canonicalize(set);
  return set;
}

CliqueSet cliques_from_pairs(const RejectionMatrix& rejected, std::span<const double> scores) {
  auto set = with_axis(scores);
  const std::size_t k = rejected.size();
  std::vector<std::size_t> current;
  bron_kerbosch(rejected, current, Bits(k, true), Bits(k, false), set.cliques);
  canonicalize(set);
  return set;
}

CliqueSet single_clique(std::span<const double> scores) {
  auto set = with_axis(scores);
  std::vector<std::size_t> all(scores.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  set.cliques.push_back(std::move(all));
  return set;
}

}  // namespace marsrank::diagram
