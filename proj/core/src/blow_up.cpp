#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <tuple>

#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"

namespace slopeforge::constructions {

namespace {

using geometry::DPoint;

std::vector<DPoint> host_points(const Drawing& host) {
  std::vector<DPoint> out;
  if (host.mode() == geometry::CoordMode::exact) {
    for (const auto& p : host.exact().vertices) out.push_back({p.x.get_d(), p.y.get_d()});
  } else {
    out = host.numeric().vertices;
  }
  return out;
}

double distance(const DPoint& a, const DPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(const DPoint& p, const DPoint& a, const DPoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  const double t = std::clamp(len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Line angles of the chords of the regular k-gon at the given rotation.
std::vector<double> chord_angles(std::size_t k, double rotation) {
  std::vector<double> out;
  if (k < 2) return out;
  const std::size_t residues = k == 2 ? 1 : k;
  for (std::size_t m = 0; m < residues; ++m) {
    const std::size_t sum = k == 2 ? 1 : m;
    double a = std::fmod(std::numbers::pi / 2 + std::numbers::pi * static_cast<double>(sum) / static_cast<double>(k) +
                             rotation,
                         std::numbers::pi);
    if (a < 0) a += std::numbers::pi;
    out.push_back(a);
  }
  return out;
}

double min_gap(const std::vector<double>& host, std::size_t k, double rotation) {
  double best = std::numeric_limits<double>::infinity();
  for (double b : chord_angles(k, rotation)) {
    for (double h : host) best = std::min(best, geometry::angle_gap(h, b));
  }
  return best;
}

// Rotation of the k-gon maximising the smallest angle to a host slope.
std::pair<double, double> best_rotation(const std::vector<double>& host, std::size_t k, std::size_t candidates) {
  if (k < 2 || host.empty()) return {0.0, std::numbers::pi / 2};
  const double period = k == 2 ? std::numbers::pi : std::numbers::pi / static_cast<double>(k);
  candidates = std::max<std::size_t>(candidates, 2);
  double step = period / static_cast<double>(candidates);
  double best_rot = 0.0;
  double best = -1.0;
  for (std::size_t i = 0; i < candidates; ++i) {
    const double rot = step * static_cast<double>(i);
    const double gap = min_gap(host, k, rot);
    if (gap > best) {
      best = gap;
      best_rot = rot;
    }
  }
  for (int round = 0; round < 2; ++round) {
    const double centre = best_rot;
    const double span = step;
    step = 2 * span / 64;
    for (int i = 0; i <= 64; ++i) {
      const double rot = centre - span + step * i;
      const double gap = min_gap(host, k, rot);
      if (gap > best) {
        best = gap;
        best_rot = rot;
      }
    }
  }
  return {best_rot, best};
}

std::size_t chord_class(std::size_t k, std::size_t i, std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, k - d) - 1;
}

}  // namespace

Construction blow_up(const Graph& g, const Drawing& host, const HPartition& part, const BlowUpOptions& options) {
  const Graph& h = part.host();
  if (host.has_bends()) throw InvalidArgument("blow_up needs a straight-line host drawing");
  if (host.vertex_count() != h.vertex_count()) throw InvalidArgument("host drawing does not match the host graph");
  if (!geometry::validate_drawing(h, host).valid) throw InvalidArgument("host drawing is not a valid drawing");
  if (part.assign().size() != g.vertex_count()) throw InvalidArgument("partition does not match the graph");

  const auto centres = host_points(host);
  const auto slope_cls = geometry::classify_slopes(host);
  const auto length_cls = geometry::classify_lengths(host);
  const HostDrawingStats stats = host_drawing_stats(host);
  const std::size_t k = std::max<std::size_t>(part.width(), 1);

  std::map<graph::Edge, std::size_t> host_edge;
  for (std::size_t i = 0; i < host.edges.size(); ++i) {
    host_edge[graph::make_edge(host.edges[i].u, host.edges[i].v)] = i;
  }

  const auto [rotation, epsilon] = best_rotation(slope_cls.representative, k, options.rotation_candidates);
  if (!(epsilon > 0)) throw ConstructionError("no polygon rotation avoids the host slopes");

  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < centres.size(); ++x) {
    for (std::size_t y = x + 1; y < centres.size(); ++y) dmin = std::min(dmin, distance(centres[x], centres[y]));
  }
  double r = std::isfinite(dmin) ? dmin / 3 : 1.0;

  auto conditions_hold = [&](double radius) {
    if (std::isfinite(dmin) && !(2 * radius < dmin)) return false;
    for (const auto& e : host.edges) {
      const DPoint& a = centres[e.u];
      const DPoint& b = centres[e.v];
      const double len = distance(a, b);
      if (2 * radius >= len || std::asin(2 * radius / len) > epsilon / 2) return false;
      for (std::size_t z = 0; z < centres.size(); ++z) {
        if (z == e.u || z == e.v) continue;
        if (point_segment_distance(centres[z], a, b) <= 2 * radius) return false;
      }
    }
    return true;
  };

  // Labels depend only on the combinatorics, not on r.
  const std::size_t half = k / 2;
  std::map<std::size_t, int> slope_label;
  std::map<std::size_t, int> length_label;
  std::map<std::tuple<int, int, std::size_t, std::size_t>, int> pair_label;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const Vertex x = part.assign()[e.u];
    const Vertex y = part.assign()[e.v];
    const std::size_t su = part.slot()[e.u];
    const std::size_t sv = part.slot()[e.v];
    const std::size_t idx = i;
    if (x == y) {
      slope_label[idx] = static_cast<int>((su + sv) % k);
      length_label[idx] = static_cast<int>(chord_class(k, su, sv));
      continue;
    }
    const std::size_t he = host_edge.at(graph::make_edge(x, y));
    const int sigma = slope_cls.of_segment[he];
    const int lambda = length_cls.of_segment[he];
    if (su == sv) {
      slope_label[idx] = static_cast<int>(k) + sigma;
      length_label[idx] = static_cast<int>(half) + lambda;
      continue;
    }
    const double theta = slope_cls.representative[static_cast<std::size_t>(sigma)];
    const DPoint d{centres[y].x - centres[x].x, centres[y].y - centres[x].y};
    const bool forward = d.x * std::cos(theta) + d.y * std::sin(theta) > 0;
    const auto key = forward ? std::make_tuple(sigma, lambda, su, sv) : std::make_tuple(sigma, lambda, sv, su);
    const auto [it, inserted] = pair_label.emplace(key, static_cast<int>(pair_label.size()));
    slope_label[idx] = static_cast<int>(k + stats.s) + it->second;
    length_label[idx] = static_cast<int>(half + stats.l) + it->second;
  }

  for (std::size_t iter = 0; iter < options.max_shrink_iterations; ++iter, r /= 2) {
    if (!conditions_hold(r)) continue;
    std::vector<DPoint> pts(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const DPoint& c = centres[part.assign()[v]];
      if (k == 1) {
        pts[v] = c;
      } else {
        const DPoint corner = geometry::polygon_corner(k, part.slot()[v], rotation);
        pts[v] = {c.x + r * corner.x, c.y + r * corner.y};
      }
    }
    Drawing d = geometry::make_drawing(g, std::move(pts));
    d.slope_class = slope_label;
    d.length_class = length_label;
    if (!geometry::validate_drawing(g, d).valid) continue;
    const std::size_t extra = stats.t * (k * k - k);
    Certificate cert;
    cert.claimed_slope_bound = k + stats.s + extra;
    cert.claimed_length_bound = half + stats.l + extra;
    cert.alternate_length_bound = (k + 1) / 2 + stats.l + extra;
    cert.theorem = Theorem::blow_up;
    return {g, std::move(d), cert, r};
  }
  throw ConstructionError("blow_up: no disc radius satisfied the separation conditions");
}

Construction draw_bandwidth(const Graph& g, const graph::VertexOrdering& o) {
  if (o.order().size() != g.vertex_count()) throw InvalidArgument("ordering does not match the graph");
  const std::size_t n = g.vertex_count();
  const std::size_t b = std::max<std::size_t>(graph::ordering_width(g, o.order()), 1);
  const std::size_t blocks = std::max<std::size_t>((n + b - 1) / b, 1);
  Graph path = graph::make_path(blocks);
  std::vector<geometry::QPoint> centres;
  for (std::size_t i = 0; i < blocks; ++i) centres.push_back({static_cast<long>(i), 0});
  Drawing host = geometry::make_drawing(path, std::move(centres));
  std::vector<Vertex> assign(n);
  std::vector<std::size_t> slot(n);
  for (std::size_t p = 0; p < n; ++p) {
    assign[o.order()[p]] = static_cast<Vertex>(p / b);
    slot[o.order()[p]] = p % b;
  }
  HPartition part(g, std::move(path), std::move(assign), std::move(slot));
  Construction c = blow_up(g, host, part);
  c.certificate.claimed_slope_bound = b * (b + 1) / 2 + 1;
  c.certificate.theorem = Theorem::bandwidth;
  return c;
}

Construction draw_tree_partitioned(const Graph& g, const HPartition& part, const TreeOptions& tree_options,
                                   const BlowUpOptions& blow_options) {
  if (!graph::is_forest(part.host())) throw InvalidArgument("tree-partition host must be a forest");
  const Construction host = draw_tree(part.host(), tree_options);
  Construction c = blow_up(g, host.drawing, part, blow_options);
  c.certificate.theorem = Theorem::tree_partition;
  return c;
}

}  // namespace slopeforge::constructions
