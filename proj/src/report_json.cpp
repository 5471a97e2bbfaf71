#include "marsrank/report.hpp"

#include <json.hpp>

#include "marsrank/error.hpp"
#include "marsrank/matrix_io.hpp"

namespace marsrank {
namespace {

using nlohmann::ordered_json;

ordered_json cliques_json(const diagram::CliqueSet& set) {
  ordered_json out;
  out["members"] = set.cliques;
  out["axis_min"] = set.axis_min;
  out["axis_max"] = set.axis_max;
  return out;
}

diagram::CliqueSet cliques_from(const ordered_json& doc) {
  diagram::CliqueSet set;
  set.cliques = doc.at("members").get<std::vector<std::vector<std::size_t>>>();
  set.axis_min = doc.at("axis_min").get<double>();
  set.axis_max = doc.at("axis_max").get<double>();
  return set;
}

ordered_json global_json(const GlobalTest& test) {
  ordered_json out;
  out["name"] = test.name;
  out["statistic"] = test.statistic;
  if (test.df) out["df"] = *test.df;
  out["p_value"] = test.p_value;
  out["reject"] = test.reject;
  out["gates_pairwise"] = test.gates_pairwise;
  if (test.rho) out["rho"] = *test.rho;
  if (test.exceed_count) out["exceed_count"] = *test.exceed_count;
  return out;
}

GlobalTest global_from(const ordered_json& doc) {
  GlobalTest test;
  test.name = doc.at("name").get<std::string>();
  test.statistic = doc.at("statistic").get<double>();
  test.p_value = doc.at("p_value").get<double>();
  test.reject = doc.at("reject").get<bool>();
  test.gates_pairwise = doc.at("gates_pairwise").get<bool>();
  if (doc.contains("df")) test.df = doc["df"].get<int>();
  if (doc.contains("rho")) test.rho = doc["rho"].get<std::size_t>();
  if (doc.contains("exceed_count")) test.exceed_count = doc["exceed_count"].get<std::size_t>();
  return test;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::Standard: return "standard";
    case Mode::Mars: return "mars";
    case Mode::Both: return "both";
  }
  return "both";
}

std::string_view to_string(CliqueSource source) noexcept {
  return source == CliqueSource::Cd ? "cd" : "holm";
}

std::string_view to_string(mars::SigmaMode mode) noexcept {
  return mode == mars::SigmaMode::Pooled ? "pooled" : "scores";
}

Mode parse_mode(std::string_view text) {
  if (text == "standard") return Mode::Standard;
  if (text == "mars") return Mode::Mars;
  if (text == "both") return Mode::Both;
  throw Error(ErrorCode::MalformedInput, "unknown mode '" + std::string(text) + "'");
}

CliqueSource parse_clique_source(std::string_view text) {
  if (text == "cd") return CliqueSource::Cd;
  if (text == "holm") return CliqueSource::Holm;
  throw Error(ErrorCode::MalformedInput, "unknown clique source '" + std::string(text) + "'");
}

mars::SigmaMode parse_sigma_mode(std::string_view text) {
  if (text == "pooled") return mars::SigmaMode::Pooled;
  if (text == "scores") return mars::SigmaMode::MethodScores;
  throw Error(ErrorCode::MalformedInput, "unknown sigma mode '" + std::string(text) + "'");
}

std::string report_to_json(const AnalysisReport& report) {
  ordered_json doc;
  doc["tool_version"] = report.tool_version;
  doc["mode"] = to_string(report.mode);
  doc["alpha"] = report.alpha;
  doc["k"] = report.k;
  doc["n_datasets"] = report.n_datasets;
  doc["method_names"] = report.method_names;

  auto& config = doc["config"];
  config["direction"] = io::to_string(report.config.direction);
  config["sigma_mode"] = to_string(report.config.sigma_mode);
  config["clique_source"] = to_string(report.config.clique_source);
  config["standard_clique_source"] = to_string(report.config.standard_clique_source);
  config["friedman_gate"] = report.config.friedman_gate;
  config["rho"] = report.config.rho;
  config["seed"] = report.config.seed;

  if (report.standard) {
    const auto& s = *report.standard;
    auto& out = doc["standard"];
    out["avg_ranks"] = s.avg_ranks;
    out["cd_standard"] = s.cd_standard;
    out["global_test"] = global_json(s.global_test);
    out["posthoc"] = s.posthoc_run ? "run" : "skipped";
    out["cliques"] = cliques_json(s.cliques);
  }
  if (report.mars) {
    const auto& m = *report.mars;
    auto& out = doc["mars"];
    out["mars_scores"] = m.mars_scores;
    out["sigma"] = m.sigma;
    out["cd_mars"] = m.cd_mars;
    out["global_test"] = global_json(m.global_test);
    out["cliques"] = cliques_json(m.cliques);
  }
  if (report.pairwise) {
    auto pairs = ordered_json::array();
    for (const auto& p : *report.pairwise) {
      ordered_json item;
      item["method_a"] = p.method_a;
      item["method_b"] = p.method_b;
      item["p_raw"] = p.p_raw;
      item["holm_rank"] = p.holm_rank;
      item["holm_threshold"] = p.holm_threshold;
      item["rejected"] = p.rejected;
      pairs.push_back(std::move(item));
    }
    doc["pairwise"] = std::move(pairs);
  }
  return doc.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    AnalysisReport report;
    report.tool_version = doc.at("tool_version").get<std::string>();
    report.mode = parse_mode(doc.at("mode").get<std::string>());
    report.alpha = doc.at("alpha").get<double>();
    report.k = doc.at("k").get<std::size_t>();
    report.n_datasets = doc.at("n_datasets").get<std::size_t>();
    report.method_names = doc.at("method_names").get<std::vector<std::string>>();

    const auto& config = doc.at("config");
    report.config.direction = io::parse_direction(config.at("direction").get<std::string>());
    report.config.sigma_mode = parse_sigma_mode(config.at("sigma_mode").get<std::string>());
    report.config.clique_source = parse_clique_source(config.at("clique_source").get<std::string>());
    report.config.standard_clique_source =
        parse_clique_source(config.at("standard_clique_source").get<std::string>());
    report.config.friedman_gate = config.at("friedman_gate").get<bool>();
    report.config.rho = config.at("rho").get<std::size_t>();
    report.config.seed = config.at("seed").get<std::uint64_t>();

    if (doc.contains("standard")) {
      const auto& s = doc["standard"];
      StandardSection section;
      section.avg_ranks = s.at("avg_ranks").get<std::vector<double>>();
      section.cd_standard = s.at("cd_standard").get<double>();
      section.global_test = global_from(s.at("global_test"));
      section.posthoc_run = s.at("posthoc").get<std::string>() == "run";
      section.cliques = cliques_from(s.at("cliques"));
      report.standard = std::move(section);
    }
    if (doc.contains("mars")) {
      const auto& m = doc["mars"];
      MarsSection section;
      section.mars_scores = m.at("mars_scores").get<std::vector<double>>();
      section.sigma = m.at("sigma").get<double>();
      section.cd_mars = m.at("cd_mars").get<double>();
      section.global_test = global_from(m.at("global_test"));
      section.cliques = cliques_from(m.at("cliques"));
      report.mars = std::move(section);
    }
    if (doc.contains("pairwise")) {
      std::vector<classic::PairwiseResult> pairs;
      for (const auto& item : doc["pairwise"]) {
        classic::PairwiseResult p;
        p.method_a = item.at("method_a").get<std::size_t>();
        p.method_b = item.at("method_b").get<std::size_t>();
        p.p_raw = item.at("p_raw").get<double>();
        p.holm_rank = item.at("holm_rank").get<std::size_t>();
        p.holm_threshold = item.at("holm_threshold").get<double>();
        p.rejected = item.at("rejected").get<bool>();
        pairs.push_back(p);
      }
      report.pairwise = std::move(pairs);
    }
    return report;
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid report: ") + e.what());
  }
}

}  // namespace marsrank
