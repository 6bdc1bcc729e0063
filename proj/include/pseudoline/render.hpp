#pragma once

#include <string>

#include "pseudoline/constructions.hpp"

namespace pseudoline {

struct RenderOptions {
  int width = 800;
  int height = 400;
  bool shade_triangles = true;
  bool mark_unused = true;
  bool show_labels = true;
};

// SVG 1.1 wiring diagram. Crossing k sits at column k+1 midway between its
// two tracks and wires run straight between consecutive crossings. Each wire
// is one `polyline.wire`; triangles are `polygon.triangle` (projective
// wedges are closed off at the drawing's edge); unused segments are
// `line.unused`, dashed. Throws Error{InvalidArgument} for non-positive sizes.
std::string render_svg(const Arrangement& a, const RenderOptions& opts = {});

}  // namespace pseudoline
