#include "marsrank/matrix.hpp"

#include <cmath>
#include <unordered_set>

#include "marsrank/error.hpp"

namespace marsrank {
namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::MalformedInput,
                  std::string("duplicate ") + what + " name '" + name + "'");
    }
  }
}

}  // namespace

PerformanceMatrix::PerformanceMatrix(std::vector<std::string> method_names,
                                     std::vector<std::string> dataset_names,
                                     std::vector<double> values, Direction direction)
    : method_names_(std::move(method_names)),
      dataset_names_(std::move(dataset_names)),
      values_(std::move(values)),
      direction_(direction) {
  if (method_names_.size() < 2) {
    throw Error(ErrorCode::TooFewMethods,
                "need at least 2 methods, got " + std::to_string(method_names_.size()));
  }
  if (dataset_names_.empty()) {
    throw Error(ErrorCode::EmptyMatrix, "matrix has no datasets");
  }
  if (values_.size() != method_names_.size() * dataset_names_.size()) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(method_names_.size() * dataset_names_.size()) +
                    " values, got " + std::to_string(values_.size()));
  }
  require_unique(method_names_, "method");
  require_unique(dataset_names_, "dataset");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      const auto k = method_names_.size();
      throw Error(ErrorCode::NonFiniteValue, "non-finite value at dataset '" +
                                                 dataset_names_[i / k] + "', method '" +
                                                 method_names_[i % k] + "'");
    }
  }
}

std::vector<double> PerformanceMatrix::column(std::size_t method) const {
  std::vector<double> out(datasets());
  for (std::size_t i = 0; i < datasets(); ++i) out[i] = at(i, method);
  return out;
}

}  // namespace marsrank
