#include "marsrank/cd_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "marsrank/error.hpp"

namespace marsrank::diagram {
namespace {

constexpr double kMargin = 20.0;
constexpr double kTitleHeight = 28.0;
constexpr double kRulerHeight = 34.0;
constexpr double kTickLabelHeight = 22.0;
constexpr double kBarSpacing = 9.0;
constexpr double kRowSpacing = 22.0;
constexpr double kLabelColumn = 0.22;  // fraction of width reserved per label column

std::string num(double v, const char* fmt = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

double tick_step(double span) {
  for (double magnitude = 1.0;; magnitude *= 10.0) {
    for (double mult : {1.0, 2.0, 5.0}) {
      if (span / (mult * magnitude) <= 20.0) return mult * magnitude;
    }
  }
}

std::vector<double> axis_ticks(double lo, double hi) {
  if (hi <= lo) return {lo};
  const double step = tick_step(hi - lo);
  std::vector<double> ticks;
  for (double t = lo; t < hi - 1e-9; t += step) ticks.push_back(t);
  ticks.push_back(hi);
  return ticks;
}

}  // namespace

bool is_degenerate_axis(std::span<const double> scores) {
  if (scores.empty()) return true;
  const auto [lo, hi] = std::ranges::minmax(scores);
  return lo == hi;
}

std::string render_cd_diagram(std::span<const double> scores,
                              const std::vector<std::string>& names, const CliqueSet& cliques,
                              double cd, const DiagramOptions& options) {
  const std::size_t k = scores.size();
  if (names.size() != k) {
    throw Error(ErrorCode::DegenerateInput, "diagram needs one name per score");
  }
  if (k == 0) throw Error(ErrorCode::DegenerateInput, "diagram needs at least one method");
  if (options.width_px < 100 || (options.height_px != 0 && options.height_px < 100)) {
    throw Error(ErrorCode::DomainError, "diagram dimensions must be at least 100 px");
  }
  const bool degenerate = is_degenerate_axis(scores);
  const auto [axis_lo, axis_hi] = axis_bounds(scores);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  const std::size_t left_count = (k + 1) / 2;
  const std::size_t rows = left_count;

  const auto& bars = degenerate ? std::vector<std::vector<std::size_t>>{} : cliques.cliques;

  const double width = options.width_px;
  const double axis_left = kMargin + kLabelColumn * width;
  const double axis_right = width - kMargin - kLabelColumn * width;
  double y = kMargin + (options.title.empty() ? 0.0 : kTitleHeight);
  const double ruler_y = y + 14.0;
  if (options.show_cd_ruler) y += kRulerHeight;
  const double axis_y = y + kTickLabelHeight;
  const double bars_top = axis_y + 12.0;
  const double rows_top = bars_top + static_cast<double>(bars.size()) * kBarSpacing + 16.0;
  const double natural_height = rows_top + static_cast<double>(rows) * kRowSpacing + kMargin;
  const double height = options.height_px > 0 ? options.height_px : std::ceil(natural_height);
  const double row_spacing =
      options.height_px > 0 && rows > 0
          ? std::max(8.0, (height - kMargin - rows_top) / static_cast<double>(rows))
          : kRowSpacing;

  const auto x_of = [&](double score) {
    if (axis_hi <= axis_lo) return 0.5 * (axis_left + axis_right);
    return axis_left + (score - axis_lo) / (axis_hi - axis_lo) * (axis_right - axis_left);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width, "%.0f") +
         "\" height=\"" + num(height, "%.0f") + "\" viewBox=\"0 0 " + num(width, "%.0f") + " " +
         num(height, "%.0f") + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!options.title.empty()) {
    svg += "<text class=\"title\" x=\"" + num(width / 2) + "\" y=\"" + num(kMargin + 14.0) +
           "\" text-anchor=\"middle\" font-size=\"15\">" + escape(options.title) + "</text>\n";
  }

  if (options.show_cd_ruler && cd > 0.0 && !degenerate) {
    const double x1 = axis_left;
    const double x2 = x_of(axis_lo + cd);
    svg += "<g class=\"cd-ruler\" stroke=\"black\" stroke-width=\"1.5\">\n";
    svg += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(ruler_y) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(ruler_y) + "\"/>\n";
    for (double x : {x1, x2}) {
      svg += "  <line x1=\"" + num(x) + "\" y1=\"" + num(ruler_y - 5) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(ruler_y + 5) + "\"/>\n";
    }
    svg += "</g>\n";
    svg += "<text class=\"cd-label\" x=\"" + num(0.5 * (x1 + x2)) + "\" y=\"" + num(ruler_y - 8) +
           "\" text-anchor=\"middle\">CD = " + num(cd, "%.4f") + "</text>\n";
  }

  svg += "<line class=\"axis\" x1=\"" + num(axis_left) + "\" y1=\"" + num(axis_y) + "\" x2=\"" +
         num(axis_right) + "\" y2=\"" + num(axis_y) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (double tick : axis_ticks(axis_lo, axis_hi)) {
    const double x = x_of(tick);
    svg += "<line class=\"axis-tick\" x1=\"" + num(x) + "\" y1=\"" + num(axis_y - 6) + "\" x2=\"" +
           num(x) + "\" y2=\"" + num(axis_y) + "\" stroke=\"black\"/>\n";
    svg += "<text class=\"tick-label\" x=\"" + num(x) + "\" y=\"" + num(axis_y - 9) +
           "\" text-anchor=\"middle\">" + num(tick, "%.0f") + "</text>\n";
  }
  if (!options.score_label.empty()) {
    svg += "<text class=\"axis-caption\" x=\"" + num(axis_right) + "\" y=\"" +
           num(axis_y - kTickLabelHeight - 2) + "\" text-anchor=\"end\" font-style=\"italic\">" +
           escape(options.score_label) + "</text>\n";
  }

  for (std::size_t b = 0; b < bars.size(); ++b) {
    double lo = scores[bars[b].front()];
    double hi = lo;
    for (std::size_t m : bars[b]) {
      lo = std::min(lo, scores[m]);
      hi = std::max(hi, scores[m]);
    }
    const double by = bars_top + static_cast<double>(b) * kBarSpacing;
    svg += "<line class=\"clique-bar\" x1=\"" + num(x_of(lo) - 3) + "\" y1=\"" + num(by) +
           "\" x2=\"" + num(x_of(hi) + 3) + "\" y2=\"" + num(by) +
           "\" stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
  }

  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t m = order[pos];
    const bool left = pos < left_count;
    const std::size_t row = left ? pos : k - 1 - pos;
    const double x = x_of(scores[m]);
    const double ly = rows_top + static_cast<double>(row) * row_spacing;
    const double label_x = left ? axis_left - 10.0 : axis_right + 10.0;
    svg += "<circle class=\"method-marker\" cx=\"" + num(x) + "\" cy=\"" + num(axis_y) +
           "\" r=\"2.5\" data-score=\"" + num(scores[m], "%.17g") + "\"/>\n";
    svg += "<polyline class=\"method-line\" points=\"" + num(x) + "," + num(axis_y) + " " + num(x) +
           "," + num(ly) + " " + num(label_x) + "," + num(ly) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text class=\"method-label\" x=\"" + num(left ? label_x - 4 : label_x + 4) + "\" y=\"" +
           num(ly + 4) + "\" text-anchor=\"" + (left ? "end" : "start") + "\">" +
           escape(names[m]) + " (" + num(scores[m], "%.3f") + ")</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace marsrank::diagram
