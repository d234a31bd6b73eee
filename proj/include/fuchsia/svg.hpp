#pragma once

#include <string>
#include <vector>

#include "fuchsia/tessellation.hpp"

namespace fuchsia {

/// World-coordinate window onto the upper half-plane; the lower edge is the
/// real axis.
struct Viewport {
  double xmin = -5.0;
  double xmax = 5.0;
  double ymax = 5.0;
};

struct RenderStyle {
  double stroke_width = 1.25;      // px
  std::string palette = "default"; // "default" or "mono"
  bool labels = false;             // annotate identity-tile arcs
  int width_px = 800;
};

/// Viewport padded around the presentation's boundary arcs.
Viewport default_viewport(const GroupPresentation& g);

/// SVG 1.1 document: real axis, then each tile's geodesics as circular-arc
/// or vertical-segment paths, clipped to the viewport. Output bytes are a
/// pure function of the inputs. Raises EmptyViewport for a degenerate
/// viewport.
std::string render_svg(const GroupPresentation& g,
                       const std::vector<OrbitTile>& tiles,
                       const Viewport& viewport, const RenderStyle& style = {});

}  // namespace fuchsia
