#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "marsrank/cliques.hpp"
#include "marsrank/mars_core.hpp"
#include "marsrank/matrix.hpp"
#include "marsrank/rank_classic.hpp"

namespace marsrank {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Mode { Standard, Mars, Both };
enum class CliqueSource { Cd, Holm };

struct GlobalTest {
  std::string name;  // "friedman" or "permutation"
  double statistic = 0.0;
  double p_value = 1.0;
  bool reject = false;
  // The Friedman test gates the post-hoc section; the permutation test is
  // reported alongside it and never gates anything.
  bool gates_pairwise = false;
  std::optional<int> df;
  std::optional<std::size_t> rho;
  std::optional<std::size_t> exceed_count;

  friend bool operator==(const GlobalTest&, const GlobalTest&) = default;
};

struct StandardSection {
  std::vector<double> avg_ranks;
  double cd_standard = 0.0;
  GlobalTest global_test;
  bool posthoc_run = false;
  diagram::CliqueSet cliques;

  friend bool operator==(const StandardSection&, const StandardSection&) = default;
};

struct MarsSection {
  std::vector<double> mars_scores;
  double sigma = 0.0;
  double cd_mars = 0.0;
  GlobalTest global_test;
  diagram::CliqueSet cliques;

  friend bool operator==(const MarsSection&, const MarsSection&) = default;
};

struct ReportConfig {
  Direction direction = Direction::HigherBetter;
  mars::SigmaMode sigma_mode = mars::SigmaMode::Pooled;
  CliqueSource clique_source = CliqueSource::Cd;             // MARS diagram bars
  CliqueSource standard_clique_source = CliqueSource::Holm;  // standard diagram bars
  bool friedman_gate = true;
  std::size_t rho = 10000;
  std::uint64_t seed = 42;

  friend bool operator==(const ReportConfig&, const ReportConfig&) = default;
};

struct AnalysisReport {
  Mode mode = Mode::Both;
  double alpha = 0.05;
  std::size_t k = 0;
  std::size_t n_datasets = 0;
  std::vector<std::string> method_names;
  std::optional<StandardSection> standard;
  std::optional<MarsSection> mars;
  // Absent when no section ran the post-hoc tests.
  std::optional<std::vector<classic::PairwiseResult>> pairwise;
  ReportConfig config;
  std::string tool_version{kToolVersion};

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

std::string_view to_string(Mode mode) noexcept;
std::string_view to_string(CliqueSource source) noexcept;
std::string_view to_string(mars::SigmaMode mode) noexcept;
Mode parse_mode(std::string_view text);
CliqueSource parse_clique_source(std::string_view text);
mars::SigmaMode parse_sigma_mode(std::string_view text);

// Stable, timestamp-free JSON with two-space indentation.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view text);

}  // namespace marsrank
