#pragma once

#include <cstdint>

#include "marsrank/report.hpp"

namespace marsrank {

struct AnalysisOptions {
  Alpha alpha{0.05};
  mars::SigmaMode sigma_mode = mars::SigmaMode::Pooled;
  CliqueSource clique_source = CliqueSource::Cd;
  CliqueSource standard_clique_source = CliqueSource::Holm;
  bool friedman_gate = true;
  std::size_t rho = 10000;
  std::uint64_t seed = 42;
  int threads = 0;  // permutation loop; <= 0 keeps the OpenMP default
};

// Ranks, Friedman, Nemenyi CD, and (when Friedman rejects or the gate is off)
// Wilcoxon-Holm pairs. Without post-hoc tests every method forms one clique.
AnalysisReport classic_pipeline(const PerformanceMatrix& matrix, const AnalysisOptions& options);

// MARS scores, CD_MARS, the permutation test, and Wilcoxon-Holm pairs on the
// raw values. Cliques come from CD_MARS or from Holm non-rejections.
AnalysisReport mars_pipeline(const PerformanceMatrix& matrix, const AnalysisOptions& options);

// Either or both pipelines. In Both mode the pairwise tests run once and are
// shared. The input is oriented first; config.direction echoes the input.
AnalysisReport analyze(const PerformanceMatrix& matrix, Mode mode, const AnalysisOptions& options);

// Postconditions of a finished report (rank-sum conservation, score floor,
// Holm prefix, clique maximality). Throws InvariantViolation.
void check_report_invariants(const AnalysisReport& report);

}  // namespace marsrank
