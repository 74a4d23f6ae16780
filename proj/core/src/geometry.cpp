#include "slopeforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slopeforge/errors.hpp"

namespace slopeforge::geometry {

ExactSlope slope_of(const QPoint& p, const QPoint& q) {
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  if (dx == 0 && dy == 0) throw InvalidArgument("slope_of: coincident points");
  // Clear denominators: (dx, dy) * lcm(den) is an integer direction.
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  mpz_class ix = dx.get_num() * (l / dx.get_den());
  mpz_class iy = dy.get_num() * (l / dy.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  ix /= g;
  iy /= g;
  if (iy < 0 || (iy == 0 && ix < 0)) {
    ix = -ix;
    iy = -iy;
  }
  return ExactSlope{ix, iy};
}

NumericSlope slope_of(const DPoint& p, const DPoint& q) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  if (dx == 0 && dy == 0) throw InvalidArgument("slope_of: coincident points");
  double a = std::atan2(dy, dx);
  if (a < 0) a += std::numbers::pi;
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  return NumericSlope{a};
}

double to_angle(const ExactSlope& s) {
  double a = std::atan2(s.dy.get_d(), s.dx.get_d());
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  return a;
}

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

std::size_t Drawing::vertex_count() const noexcept {
  return std::visit([](const auto& l) { return l.vertices.size(); }, layout);
}

bool Drawing::has_bends() const noexcept {
  return std::visit([](const auto& l) { return !l.bends.empty(); }, layout);
}

Drawing make_drawing(const graph::Graph& g, std::vector<QPoint> points) {
  if (points.size() != g.vertex_count()) throw InvalidArgument("placement size differs from vertex count");
  return Drawing{ExactLayout{std::move(points), {}}, g.edges(), {}, {}};
}

Drawing make_drawing(const graph::Graph& g, std::vector<DPoint> points) {
  if (points.size() != g.vertex_count()) throw InvalidArgument("placement size differs from vertex count");
  return Drawing{NumericLayout{std::move(points), {}}, g.edges(), {}, {}};
}

graph::Graph drawn_graph(const Drawing& d) {
  return std::visit(
      [&](const auto& l) {
        const std::size_t n = l.vertices.size();
        std::vector<graph::Edge> edges;
        std::size_t next = n;
        for (std::size_t i = 0; i < d.edges.size(); ++i) {
          const auto& e = d.edges[i];
          if (l.bends.contains(i)) {
            const auto x = static_cast<graph::Vertex>(next++);
            edges.push_back(graph::make_edge(e.u, x));
            edges.push_back(graph::make_edge(x, e.v));
          } else {
            edges.push_back(e);
          }
        }
        return graph::Graph(next, edges);
      },
      d.layout);
}

PolygonAssignment identity_assignment(std::size_t n) {
  PolygonAssignment a{n, std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) a.index[i] = i;
  return a;
}

namespace {

void check_assignment(const graph::Graph& g, const PolygonAssignment& a) {
  if (a.index.size() != g.vertex_count()) throw InvalidArgument("polygon assignment must cover every vertex");
  std::vector<bool> used(a.n, false);
  for (std::size_t i : a.index) {
    if (i >= a.n || used[i]) throw InvalidArgument("polygon assignment must be injective into {0..n-1}");
    used[i] = true;
  }
}

}  // namespace

std::size_t ngon_slope_count(const graph::Graph& g, const PolygonAssignment& a) {
  check_assignment(g, a);
  std::vector<bool> seen(a.n, false);
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    const std::size_t r = (a.index[e.u] + a.index[e.v]) % a.n;
    if (!seen[r]) {
      seen[r] = true;
      ++count;
    }
  }
  return count;
}

DPoint polygon_corner(std::size_t n, std::size_t i, double rotation) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + rotation;
  return DPoint{std::cos(t), std::sin(t)};
}

Drawing realize_ngon(const graph::Graph& g, const PolygonAssignment& a) {
  if (a.n < 3) throw InvalidArgument("realize_ngon: polygon needs at least 3 corners");
  check_assignment(g, a);
  std::vector<DPoint> points;
  points.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) points.push_back(polygon_corner(a.n, a.index[v]));
  Drawing d = make_drawing(g, std::move(points));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    d.slope_class[i] = static_cast<int>((a.index[e.u] + a.index[e.v]) % a.n);
  }
  return d;
}

}  // namespace slopeforge::geometry
