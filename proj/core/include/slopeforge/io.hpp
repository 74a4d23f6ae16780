#pragma once

#include <string>
#include <string_view>

#include "slopeforge/geometry.hpp"

namespace slopeforge::geometry {

// Drawing JSON:
//   {"mode": "exact"|"numeric", "vertices": [[x,y],...], "edges": [[u,v],...],
//    "bends": {"i": [x,y]}, "slope_class": {"i": c}, "length_class": {"i": c}}
// Exact coordinates are strings "p/q" (or "p"); numeric ones are numbers.
std::string drawing_to_json(const Drawing& d, int indent = 2);
// Throws ParseError on malformed input.
Drawing drawing_from_json(std::string_view text);

struct SvgOptions {
  double width = 640;
  double vertex_radius = 4;
  double stroke_width = 1.5;
};

// Deterministic SVG: one colour per slope class, y axis pointing up, viewBox
// fitted to the drawing with a 5% margin.
std::string drawing_to_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace slopeforge::geometry
