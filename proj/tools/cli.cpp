#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "marsrank/cd_diagram.hpp"
#include "marsrank/error.hpp"
#include "marsrank/matrix_io.hpp"
#include "marsrank/pipeline.hpp"
#include "marsrank/scenarios.hpp"

namespace marsrank::cli {
namespace {

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

struct DiagramFlags {
  int width = 800;
  int height = 0;
  std::string title;
  bool no_ruler = false;
};

void add_diagram_flags(CLI::App& cmd, DiagramFlags& flags) {
  cmd.add_option("--width", flags.width, "SVG width in px")->check(CLI::Range(100, 100000));
  cmd.add_option("--height", flags.height, "SVG height in px (0 = fit)");
  cmd.add_option("--title", flags.title, "Diagram title");
  cmd.add_flag("--no-ruler", flags.no_ruler, "Omit the CD ruler");
}

std::string render_section(const AnalysisReport& report, Mode which, const DiagramFlags& flags) {
  diagram::DiagramOptions options;
  options.width_px = flags.width;
  options.height_px = flags.height;
  options.show_cd_ruler = !flags.no_ruler;
  if (which == Mode::Mars) {
    if (!report.mars) throw Error(ErrorCode::MissingMode, "report has no mars section");
    options.title = flags.title.empty() ? "MARS" : flags.title;
    options.score_label = "MARS score";
    return diagram::render_cd_diagram(report.mars->mars_scores, report.method_names,
                                      report.mars->cliques, report.mars->cd_mars, options);
  }
  if (!report.standard) throw Error(ErrorCode::MissingMode, "report has no standard section");
  options.title = flags.title.empty() ? "Standard" : flags.title;
  options.score_label = "average rank";
  return diagram::render_cd_diagram(report.standard->avg_ranks, report.method_names,
                                    report.standard->cliques, report.standard->cd_standard, options);
}

void warn_degenerate(const AnalysisReport& report, Mode which, std::ostream& err) {
  const auto& scores = which == Mode::Mars ? report.mars->mars_scores : report.standard->avg_ranks;
  if (diagram::is_degenerate_axis(scores)) {
    err << "warning: DegenerateAxis: all scores are equal; diagram has a single tick and no bars\n";
  }
}

struct AnalyzeFlags {
  std::string input;
  std::string format;
  std::string mode = "both";
  double alpha = 0.05;
  std::string direction;
  std::size_t permutations = 10000;
  std::uint64_t seed = 42;
  std::string sigma = "pooled";
  std::string cliques = "cd";
  std::string standard_cliques = "holm";
  bool no_gate = false;
  int threads = 0;
  std::string out = "-";
  std::string svg;
  std::string svg_standard;
  DiagramFlags diagram;
};

void cmd_analyze(const AnalyzeFlags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto format = f.format.empty() ? io::format_for_path(f.input)
                      : f.format == "json" ? io::Format::Json
                                           : io::Format::Csv;
  auto matrix = io::parse_matrix(read_all(f.input, in), format);
  if (!f.direction.empty()) matrix = io::with_direction(matrix, io::parse_direction(f.direction));

  AnalysisOptions options;
  options.alpha = Alpha(f.alpha);
  options.sigma_mode = parse_sigma_mode(f.sigma);
  options.clique_source = parse_clique_source(f.cliques);
  options.standard_clique_source = parse_clique_source(f.standard_cliques);
  options.friedman_gate = !f.no_gate;
  options.rho = f.permutations;
  options.seed = f.seed;
  options.threads = f.threads;

  const auto report = analyze(matrix, parse_mode(f.mode), options);
  write_all(f.out, report_to_json(report), out);
  if (!f.svg.empty()) {
    const Mode which = report.mars ? Mode::Mars : Mode::Standard;
    warn_degenerate(report, which, err);
    write_all(f.svg, render_section(report, which, f.diagram), out);
  }
  if (!f.svg_standard.empty()) {
    warn_degenerate(report, Mode::Standard, err);
    write_all(f.svg_standard, render_section(report, Mode::Standard, f.diagram), out);
  }
}

struct ScenarioFlags {
  int id = 1;
  std::uint64_t seed = 42;
  std::string out = "-";
  std::string format = "csv";
};

void cmd_scenario(const ScenarioFlags& f, std::ostream& out) {
  const auto matrix = scenarios::generate_scenario({f.id, f.seed});
  write_all(f.out, f.format == "json" ? io::to_json(matrix) : io::to_csv(matrix), out);
}

struct DiagramCommandFlags {
  std::string report;
  std::string which = "mars";
  std::string out = "-";
  DiagramFlags diagram;
};

void cmd_diagram(const DiagramCommandFlags& f, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  const auto report = report_from_json(read_all(f.report, in));
  const Mode which = f.which == "mars" ? Mode::Mars : Mode::Standard;
  const auto svg = render_section(report, which, f.diagram);
  warn_degenerate(report, which, err);
  write_all(f.out, svg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rank statistics for comparing methods across datasets: Friedman/Nemenyi/"
               "Wilcoxon-Holm and magnitude-aware rank scores (MARS)."};
  app.name(args.empty() ? "marsrank" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  AnalyzeFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse a performance matrix");
  analyze_cmd->add_option("--input", analyze_flags.input, "CSV or JSON matrix ('-' = stdin)")
      ->required();
  analyze_cmd->add_option("--format", analyze_flags.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze_cmd->add_option("--mode", analyze_flags.mode, "standard|mars|both")
      ->check(CLI::IsMember({"standard", "mars", "both"}));
  analyze_cmd->add_option("--alpha", analyze_flags.alpha, "Significance level (0.05 or 0.10)");
  analyze_cmd->add_option("--direction", analyze_flags.direction,
                          "higher|lower (default: from input, else higher)")
      ->check(CLI::IsMember({"higher", "lower"}));
  analyze_cmd->add_option("--permutations", analyze_flags.permutations, "Permutation count")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seed", analyze_flags.seed, "Permutation seed");
  analyze_cmd->add_option("--sigma", analyze_flags.sigma, "pooled|scores")
      ->check(CLI::IsMember({"pooled", "scores"}));
  analyze_cmd->add_option("--cliques", analyze_flags.cliques, "MARS bars from cd|holm")
      ->check(CLI::IsMember({"cd", "holm"}));
  analyze_cmd->add_option("--standard-cliques", analyze_flags.standard_cliques,
                          "Standard bars from holm|cd (Nemenyi)")
      ->check(CLI::IsMember({"cd", "holm"}));
  analyze_cmd->add_flag("--no-friedman-gate", analyze_flags.no_gate,
                        "Run post-hoc tests even when Friedman does not reject");
  analyze_cmd->add_option("--threads", analyze_flags.threads, "Permutation threads (0 = default)");
  analyze_cmd->add_option("--out", analyze_flags.out, "JSON report path ('-' = stdout)");
  analyze_cmd->add_option("--svg", analyze_flags.svg, "CD diagram (MARS when available)");
  analyze_cmd->add_option("--svg-standard", analyze_flags.svg_standard, "Standard CD diagram");
  add_diagram_flags(*analyze_cmd, analyze_flags.diagram);

  ScenarioFlags scenario_flags;
  auto* scenario_cmd = app.add_subcommand("scenario", "Write a synthetic benchmark matrix");
  scenario_cmd->add_option("--id", scenario_flags.id, "Scenario 1..6")->required();
  scenario_cmd->add_option("--seed", scenario_flags.seed, "Noise seed (scenario 6)");
  scenario_cmd->add_option("--out", scenario_flags.out, "Output path ('-' = stdout)");
  scenario_cmd->add_option("--format", scenario_flags.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  DiagramCommandFlags diagram_flags;
  auto* diagram_cmd = app.add_subcommand("diagram", "Render a CD diagram from a JSON report");
  diagram_cmd->add_option("--report", diagram_flags.report, "Report path ('-' = stdin)")
      ->required();
  diagram_cmd->add_option("--which", diagram_flags.which, "standard|mars")
      ->check(CLI::IsMember({"standard", "mars"}));
  diagram_cmd->add_option("--out", diagram_flags.out, "SVG path ('-' = stdout)");
  add_diagram_flags(*diagram_cmd, diagram_flags.diagram);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (analyze_cmd->parsed()) cmd_analyze(analyze_flags, in, out, err);
    if (scenario_cmd->parsed()) cmd_scenario(scenario_flags, out);
    if (diagram_cmd->parsed()) cmd_diagram(diagram_flags, in, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace marsrank::cli
