#pragma once

#include <span>
#include <string>
#include <vector>

#include "marsrank/cliques.hpp"

namespace marsrank::diagram {

struct DiagramOptions {
  int width_px = 800;
  int height_px = 0;  // 0 sizes the canvas to fit the label rows
  std::string title;
  bool show_cd_ruler = true;
  std::string score_label = "average rank";
};

// True when every score is equal; the axis then collapses to a single tick
// and no bars are drawn.
bool is_degenerate_axis(std::span<const double> scores);

// Standalone SVG 1.1 critical difference diagram. Lower scores sit on the
// left. The better half of the methods is labelled on the left, the rest on
// the right, each with an elbow connector down from its axis position. One
// bar per clique is stacked under the axis, and a CD ruler sits above it.
//
// Elements carry class attributes (axis-tick, method-marker, method-label,
// clique-bar, cd-ruler) so the structure can be inspected mechanically.
// The output is a pure function of the arguments.
std::string render_cd_diagram(std::span<const double> scores,
                              const std::vector<std::string>& names, const CliqueSet& cliques,
                              double cd, const DiagramOptions& options);

}  // namespace marsrank::diagram
