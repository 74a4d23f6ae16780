#include <algorithm>
#include <cstdio>
#include <sstream>

#include "detail/segments.hpp"
#include "slopeforge/io.hpp"

namespace slopeforge::geometry {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string colour(int cls, std::size_t count) {
  const double hue = count == 0 ? 0.0 : 360.0 * cls / static_cast<double>(count);
  return "hsl(" + fmt(hue) + ",70%,42%)";
}

}  // namespace

std::string drawing_to_svg(const Drawing& d, const SvgOptions& options) {
  std::vector<DPoint> pts;
  std::vector<std::array<std::size_t, 2>> segments;
  std::size_t vertices = 0;
  std::visit(
      [&](const auto& layout) {
        const auto view = detail::make_view(layout, d.edges);
        vertices = view.vertex_count;
        segments = view.segments;
        for (const auto& p : view.points) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, QPoint>) {
            pts.push_back({p.x.get_d(), p.y.get_d()});
          } else {
            pts.push_back(p);
          }
        }
      },
      d.layout);
  const Classes classes = classify_slopes(d);

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!pts.empty()) {
    x0 = x1 = pts[0].x;
    y0 = y1 = pts[0].y;
    for (const auto& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  double span = std::max(x1 - x0, y1 - y0);
  if (span <= 0) span = 1;
  const double margin = 0.05 * span;
  const double scale = options.width / (x1 - x0 + 2 * margin > 0 ? x1 - x0 + 2 * margin : 1);
  const double height = (y1 - y0 + 2 * margin) * scale;
  auto px = [&](const DPoint& p) { return fmt((p.x - x0 + margin) * scale); };
  auto py = [&](const DPoint& p) { return fmt((y1 - p.y + margin) * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(options.width) << ' ' << fmt(height)
      << "\" width=\"" << fmt(options.width) << "\" height=\"" << fmt(height) << "\">\n";
  out << "<g fill=\"none\" stroke-width=\"" << fmt(options.stroke_width) << "\" stroke-linecap=\"round\">\n";
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const auto& a = pts[segments[s][0]];
    const auto& b = pts[segments[s][1]];
    out << "<path d=\"M " << px(a) << ' ' << py(a) << " L " << px(b) << ' ' << py(b) << "\" stroke=\""
        << colour(classes.of_segment[s], classes.count) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#222\">\n";
  for (std::size_t v = 0; v < vertices; ++v) {
    out << "<circle cx=\"" << px(pts[v]) << "\" cy=\"" << py(pts[v]) << "\" r=\"" << fmt(options.vertex_radius)
        << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace slopeforge::geometry
