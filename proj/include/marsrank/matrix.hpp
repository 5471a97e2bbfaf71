#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace marsrank {

enum class Direction { HigherBetter, LowerBetter };

// N datasets x k methods of metric values, stored row-major (one row per dataset).
//
// The constructor enforces every invariant: k >= 2, N >= 1, unique names, and
// finite values. A constructed matrix is therefore always valid.
class PerformanceMatrix {
 public:
  PerformanceMatrix(std::vector<std::string> method_names,
                    std::vector<std::string> dataset_names,
                    std::vector<double> values,
                    Direction direction = Direction::HigherBetter);

  std::size_t methods() const noexcept { return method_names_.size(); }
  std::size_t datasets() const noexcept { return dataset_names_.size(); }

  const std::vector<std::string>& method_names() const noexcept { return method_names_; }
  const std::vector<std::string>& dataset_names() const noexcept { return dataset_names_; }
  Direction direction() const noexcept { return direction_; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t dataset) const noexcept {
    return std::span<const double>(values_).subspan(dataset * methods(), methods());
  }
  double at(std::size_t dataset, std::size_t method) const noexcept {
    return values_[dataset * methods() + method];
  }

  // Column of one method across all datasets.
  std::vector<double> column(std::size_t method) const;

  friend bool operator==(const PerformanceMatrix&, const PerformanceMatrix&) = default;

 private:
  std::vector<std::string> method_names_;
  std::vector<std::string> dataset_names_;
  std::vector<double> values_;
  Direction direction_;
};

}  // namespace marsrank
