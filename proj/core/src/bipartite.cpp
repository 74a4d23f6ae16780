#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"

namespace slopeforge::constructions {

std::pair<std::size_t, std::size_t> kab_slope_bounds(std::size_t a, std::size_t b) {
  if (a < 1 || a > b) throw InvalidArgument("kab_slope_bounds needs 1 <= a <= b");
  const std::size_t lower = (a + b) / 2;  // ceil((a+b-1)/2)
  const std::size_t upper = std::min(b, (b + 1) / 2 + a - 1);
  return {lower, upper};
}

Construction draw_kab_rows(std::size_t a, std::size_t b) {
  if (a < 1 || a > b) throw InvalidArgument("draw_kab_rows needs 1 <= a <= b (swap the sides first)");
  const std::size_t sizes[] = {a, b};
  Graph g = graph::make_complete_multipartite(sizes);
  const std::size_t rows_bound = (b + 1) / 2 + a - 1;
  Certificate cert;
  if (rows_bound > b) {
    geometry::PolygonAssignment pa{2 * b, std::vector<std::size_t>(a + b)};
    for (std::size_t v = 0; v < a + b; ++v) pa.index[v] = v < a ? 2 * v : 2 * (v - a) + 1;
    Drawing d = b == 1 ? geometry::make_drawing(g, std::vector<geometry::QPoint>{{0, 0}, {1, 0}})
                       : geometry::realize_ngon(g, pa);
    cert.claimed_slope_bound = b;
    cert.claimed_convex = true;
    cert.theorem = Theorem::kab_polygon;
    return {std::move(g), std::move(d), cert};
  }
  // Odd b: lay out b+1 and leave out the last bottom-row vertex.
  const std::size_t half = (b + 1) / 2;
  std::vector<geometry::QPoint> pts(a + b);
  for (std::size_t i = 0; i < a; ++i) pts[i] = {static_cast<long>(half + i + 1), 0};
  for (std::size_t j = 0; j < b; ++j) {
    pts[a + j] = j < half ? geometry::QPoint{static_cast<long>(j + 1), 1}
                          : geometry::QPoint{static_cast<long>(a + j + 1), -1};
  }
  Drawing d = geometry::make_drawing(g, std::move(pts));
  cert.claimed_slope_bound = rows_bound;
  cert.theorem = Theorem::kab_rows;
  return {std::move(g), std::move(d), cert};
}

}  // namespace slopeforge::constructions
