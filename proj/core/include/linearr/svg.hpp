#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/geometry.hpp"

namespace linearr {

struct Viewport {
  Rat xmin;
  Rat xmax;
  Rat ymin;
  Rat ymax;
};

/// All pairwise intersections plus a 10% margin on each axis. Degenerate
/// extents (a pencil, a single line) get a margin of 1.
Viewport auto_viewport(const LineFamily& family);

/// Parses "xmin,xmax,ymin,ymax" (rational literals). Throws ParameterError.
Viewport parse_viewport(const std::string& text);

struct RenderOptions {
  std::optional<Viewport> viewport;
  std::optional<SignVector> highlight_cell;
  std::vector<std::size_t> highlight_lines;
  int width_px = 480;
  double stroke_width = 1.5;
  std::string stroke = "#1f2d3d";
  std::string highlight_stroke = "#c0392b";
  std::string fill = "#f4d03f";
};

/// SVG 1.1 document: one path per line clipped to the viewport and, if
/// requested, the highlighted cell as a filled polygon. Coordinates are the
/// only approximated values (12 significant digits). Throws
/// EmptyViewportError if no line meets the viewport, ParameterError on an
/// empty family, InfeasibleSignVectorError on a bad highlight.
std::string render_svg(const LineFamily& family, const RenderOptions& options = {});

}  // namespace linearr
