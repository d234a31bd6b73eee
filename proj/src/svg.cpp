#include "fuchsia/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "fuchsia/error.hpp"

namespace fuchsia {

namespace {

const char* const kDefaultPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                       "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kDefaultPaletteSize = 6;

void appendf(std::string& out, const char* fmt, ...) {
  char buffer[512];
  va_list args;
  va_start(args, fmt);
  const int n = std::vsnprintf(buffer, sizeof(buffer), fmt, args);
  va_end(args);
  if (n > 0) out.append(buffer, static_cast<std::size_t>(std::min<int>(n, sizeof(buffer) - 1)));
}

struct Frame {
  double scale;  // px per world unit
  double xmin;
  double ymax;
  double width_px;
  double height_px;

  double sx(double x) const { return (x - xmin) * scale; }
  double sy(double y) const { return (ymax - y) * scale; }
};

const char* tile_color(const std::string& palette, std::size_t word_length) {
  if (palette == "mono") return "#333333";
  return kDefaultPalette[std::min(word_length, kDefaultPaletteSize - 1)];
}

void append_geodesic_path(std::string& out, const Frame& frame, const Geodesic& g,
                          const char* color, double stroke_width) {
  if (g.is_half_circle()) {
    const HalfCircle& hc = g.half_circle();
    const double r = hc.radius * frame.scale;
    // Left endpoint to right endpoint over the top; sweep 1 is the
    // clockwise screen direction in SVG's y-down frame.
    appendf(out,
            "<path class=\"arc\" d=\"M %.2f %.2f A %.2f %.2f 0 0 1 %.2f %.2f\" "
            "stroke=\"%s\" stroke-width=\"%.2f\" fill=\"none\"/>\n",
            frame.sx(hc.center - hc.radius), frame.sy(0.0), r, r,
            frame.sx(hc.center + hc.radius), frame.sy(0.0), color, stroke_width);
  } else {
    const VerticalRay& vr = g.vertical_ray();
    appendf(out,
            "<path class=\"ray\" d=\"M %.2f %.2f L %.2f %.2f\" "
            "stroke=\"%s\" stroke-width=\"%.2f\" fill=\"none\"/>\n",
            frame.sx(vr.foot), frame.sy(0.0), frame.sx(vr.foot), frame.sy(frame.ymax),
            color, stroke_width);
  }
}

}  // namespace

Viewport default_viewport(const GroupPresentation& g) {
  double lo = 0.0, hi = 0.0, max_radius = 1.0;
  bool seen = false;
  for (const Geodesic& arc : g.boundary_arcs) {
    double left, right;
    if (arc.is_half_circle()) {
      const HalfCircle& hc = arc.half_circle();
      left = hc.center - hc.radius;
      right = hc.center + hc.radius;
      max_radius = std::max(max_radius, hc.radius);
    } else {
      left = right = arc.vertical_ray().foot;
    }
    lo = seen ? std::min(lo, left) : left;
    hi = seen ? std::max(hi, right) : right;
    seen = true;
  }
  if (!seen) return Viewport{};
  const double pad = std::max(0.5, 0.05 * (hi - lo));
  return Viewport{lo - pad, hi + pad, std::max(1.0, 1.6 * max_radius)};
}

std::string render_svg(const GroupPresentation& g,
                       const std::vector<OrbitTile>& tiles,
                       const Viewport& viewport, const RenderStyle& style) {
  if (!(viewport.xmax > viewport.xmin) || !(viewport.ymax > 0.0) ||
      style.width_px <= 0) {
    raise(ErrorCode::EmptyViewport, "render_svg: viewport must have positive extent");
  }
  Frame frame;
  frame.scale = style.width_px / (viewport.xmax - viewport.xmin);
  frame.xmin = viewport.xmin;
  frame.ymax = viewport.ymax;
  frame.width_px = static_cast<double>(style.width_px);
  frame.height_px = viewport.ymax * frame.scale;

  std::string out;
  out.reserve(4096 + tiles.size() * 256);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"%.2f\" height=\"%.2f\" viewBox=\"0 0 %.2f %.2f\">\n",
          frame.width_px, frame.height_px, frame.width_px, frame.height_px);
  appendf(out,
          "<defs><clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"%.2f\" "
          "height=\"%.2f\"/></clipPath></defs>\n",
          frame.width_px, frame.height_px);
  appendf(out, "<rect x=\"0\" y=\"0\" width=\"%.2f\" height=\"%.2f\" fill=\"#ffffff\"/>\n",
          frame.width_px, frame.height_px);
  out += "<g clip-path=\"url(#viewport)\">\n";

  // Real axis, plus the imaginary axis when visible.
  appendf(out,
          "<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
          "stroke=\"#999999\" stroke-width=\"1.00\"/>\n",
          frame.sx(viewport.xmin), frame.sy(0.0), frame.sx(viewport.xmax), frame.sy(0.0));
  if (viewport.xmin < 0.0 && viewport.xmax > 0.0) {
    appendf(out,
            "<line class=\"axis\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
            "stroke=\"#cccccc\" stroke-width=\"1.00\" stroke-dasharray=\"4 3\"/>\n",
            frame.sx(0.0), frame.sy(viewport.ymax), frame.sx(0.0), frame.sy(0.0));
  }

  for (const OrbitTile& tile : tiles) {
    const char* color = tile_color(style.palette, tile.word.size());
    appendf(out, "<g class=\"tile\" data-word-length=\"%zu\">\n", tile.word.size());
    for (const Geodesic& arc : tile.arcs) {
      append_geodesic_path(out, frame, arc, color, style.stroke_width);
    }
    if (style.labels && tile.word.empty() && !g.arc_labels.empty()) {
      for (std::size_t i = 0; i < tile.arcs.size() && i < g.arc_labels.size(); ++i) {
        if (!tile.arcs[i].is_half_circle()) continue;
        const HalfCircle& hc = tile.arcs[i].half_circle();
        appendf(out,
                "<text class=\"label\" x=\"%.2f\" y=\"%.2f\" font-size=\"11\" "
                "text-anchor=\"middle\" fill=\"#444444\">%s</text>\n",
                frame.sx(hc.center), frame.sy(hc.radius) - 4.0,
                g.arc_labels[i].c_str());
      }
    }
    out += "</g>\n";
  }

  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace fuchsia
