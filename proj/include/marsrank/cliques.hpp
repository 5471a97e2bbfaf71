#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace marsrank::diagram {

// Maximal groups of methods that are not significantly different. Members are
// ascending method indices; cliques are in lexicographic order. Singletons
// are not reported.
struct CliqueSet {
  std::vector<std::vector<std::size_t>> cliques;
  double axis_min = 0.0;
  double axis_max = 0.0;

  friend bool operator==(const CliqueSet&, const CliqueSet&) = default;
};

// Symmetric k x k flag matrix; true means the pair was declared different.
class RejectionMatrix {
 public:
  explicit RejectionMatrix(std::size_t k) : k_(k), flags_(k * k, 0) {}

  std::size_t size() const noexcept { return k_; }
  bool rejected(std::size_t a, std::size_t b) const noexcept { return flags_[a * k_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool rejected) noexcept {
    flags_[a * k_ + b] = flags_[b * k_ + a] = rejected ? 1 : 0;
  }

 private:
  std::size_t k_;
  std::vector<std::uint8_t> flags_;
};

// [floor(min), ceil(max)] of the scores.
std::pair<double, double> axis_bounds(std::span<const double> scores);

// Pairs closer than cd are connected. The graph is an interval graph over the
// sorted scores, so its maximal cliques are the maximal sorted windows whose
// extremes differ by less than cd.
CliqueSet cliques_from_threshold(std::span<const double> scores, double cd);

// Maximal cliques (Bron-Kerbosch with pivoting) of the non-rejection graph.
CliqueSet cliques_from_pairs(const RejectionMatrix& rejected, std::span<const double> scores);

// Single clique holding every method.
CliqueSet single_clique(std::span<const double> scores);

}  // namespace marsrank::diagram
