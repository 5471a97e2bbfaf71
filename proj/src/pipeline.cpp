#include "marsrank/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "marsrank/error.hpp"
#include "marsrank/matrix_io.hpp"
#include "marsrank/permutation.hpp"

namespace marsrank {
namespace {

diagram::RejectionMatrix rejections(std::size_t k,
                                    const std::vector<classic::PairwiseResult>& pairs) {
  diagram::RejectionMatrix out(k);
  for (const auto& pair : pairs) out.set(pair.method_a, pair.method_b, pair.rejected);
  return out;
}

StandardSection standard_section(const PerformanceMatrix& oriented, const AnalysisOptions& options,
                                 std::optional<std::vector<classic::PairwiseResult>>& pairwise) {
  StandardSection section;
  const auto ranks = classic::rank_matrix(oriented);
  section.avg_ranks = classic::average_ranks(ranks);
  const auto friedman =
      classic::friedman_test(section.avg_ranks, oriented.datasets(), options.alpha);
  section.global_test = {"friedman", friedman.statistic, friedman.p_value, friedman.reject,
                         true, friedman.df, std::nullopt, std::nullopt};
  section.cd_standard = classic::nemenyi_cd(oriented.methods(), oriented.datasets(), options.alpha);
  section.posthoc_run = !options.friedman_gate || friedman.reject;

  if (!section.posthoc_run) {
    section.cliques = diagram::single_clique(section.avg_ranks);
    return section;
  }
  if (!pairwise) pairwise = classic::pairwise_wilcoxon_holm(oriented, options.alpha);
  section.cliques =
      options.standard_clique_source == CliqueSource::Holm
          ? diagram::cliques_from_pairs(rejections(oriented.methods(), *pairwise), section.avg_ranks)
          : diagram::cliques_from_threshold(section.avg_ranks, section.cd_standard);
  return section;
}

MarsSection mars_section(const PerformanceMatrix& oriented, const AnalysisOptions& options,
                         std::optional<std::vector<classic::PairwiseResult>>& pairwise) {
  MarsSection section;
  const auto scored = mars::score_matrix(oriented, options.alpha, options.sigma_mode);
  section.mars_scores = scored.scores;
  section.sigma = scored.sigma;
  section.cd_mars = scored.cd;

  const auto perm = mars::permutation_test(oriented, options.rho, options.seed, options.threads);
  section.global_test = {"permutation", perm.observed_statistic,  perm.p_value,
                         perm.p_value < options.alpha.value(), false, std::nullopt,
                         perm.rho, perm.exceed_count};

  if (!pairwise) pairwise = classic::pairwise_wilcoxon_holm(oriented, options.alpha);
  if (options.clique_source == CliqueSource::Holm) {
    section.cliques =
        diagram::cliques_from_pairs(rejections(oriented.methods(), *pairwise), section.mars_scores);
  } else if (section.cd_mars == 0.0) {
    // Zero spread: every weighted rank is equal, so no method can be told apart.
    section.cliques = diagram::single_clique(section.mars_scores);
  } else {
    section.cliques = diagram::cliques_from_threshold(section.mars_scores, section.cd_mars);
  }
  return section;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace

AnalysisReport analyze(const PerformanceMatrix& matrix, Mode mode, const AnalysisOptions& options) {
  const auto oriented = io::orient(matrix);
  // Fail on an unsupported table lookup before any heavy work.
  (void)classic::nemenyi_cd(oriented.methods(), oriented.datasets(), options.alpha);

  AnalysisReport report;
  report.mode = mode;
  report.alpha = options.alpha.value();
  report.k = oriented.methods();
  report.n_datasets = oriented.datasets();
  report.method_names = oriented.method_names();
  report.config = {matrix.direction(),   options.sigma_mode,   options.clique_source,
                   options.standard_clique_source, options.friedman_gate, options.rho,
                   options.seed};

  if (mode != Mode::Mars) report.standard = standard_section(oriented, options, report.pairwise);
  if (mode != Mode::Standard) report.mars = mars_section(oriented, options, report.pairwise);
  check_report_invariants(report);
  return report;
}

AnalysisReport classic_pipeline(const PerformanceMatrix& matrix, const AnalysisOptions& options) {
  return analyze(matrix, Mode::Standard, options);
}

AnalysisReport mars_pipeline(const PerformanceMatrix& matrix, const AnalysisOptions& options) {
  return analyze(matrix, Mode::Mars, options);
}

void check_report_invariants(const AnalysisReport& report) {
  const double k = static_cast<double>(report.k);
  const double rank_total = k * (k + 1.0) / 2.0;
  const auto check_cliques = [&](const diagram::CliqueSet& set) {
    for (std::size_t a = 0; a < set.cliques.size(); ++a) {
      require(set.cliques[a].size() >= 2, "clique with fewer than two members");
      for (std::size_t b = 0; b < set.cliques.size(); ++b) {
        if (a == b) continue;
        require(!std::ranges::includes(set.cliques[b], set.cliques[a]), "non-maximal clique");
      }
    }
  };

  if (report.standard) {
    const auto& avg = report.standard->avg_ranks;
    const double sum = std::accumulate(avg.begin(), avg.end(), 0.0);
    require(std::fabs(sum - rank_total) <= 1e-9 * rank_total, "average ranks do not sum to k(k+1)/2");
    for (double r : avg) require(r >= 1.0 - 1e-12 && r <= k + 1e-12, "average rank outside [1,k]");
    check_cliques(report.standard->cliques);
  }
  if (report.mars) {
    for (double s : report.mars->mars_scores) require(s >= 1.0 - 1e-12, "MARS score below 1");
    require((report.mars->cd_mars == 0.0) == (report.mars->sigma == 0.0), "cd_mars/sigma mismatch");
    check_cliques(report.mars->cliques);
  }
  if (report.pairwise) {
    std::vector<const classic::PairwiseResult*> sorted;
    for (const auto& pair : *report.pairwise) sorted.push_back(&pair);
    std::ranges::sort(sorted, {}, &classic::PairwiseResult::holm_rank);
    bool seen_retained = false;
    for (const auto* pair : sorted) {
      require(!(pair->rejected && seen_retained), "Holm rejections are not a prefix");
      require(!pair->rejected || pair->p_raw <= pair->holm_threshold, "rejection above threshold");
      seen_retained = seen_retained || !pair->rejected;
    }
  }
}

}  // namespace marsrank
