#include <bit>

#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"

namespace slopeforge::constructions {

namespace {

std::size_t chord_class(std::size_t n, std::size_t i, std::size_t j) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d) - 1;
}

// Single horizontal unit edge, exact.
Drawing unit_edge(const Graph& g) {
  return geometry::make_drawing(g, std::vector<geometry::QPoint>{{0, 0}, {1, 0}});
}

}  // namespace

Construction draw_complete_ngon(std::size_t n) {
  if (n < 3) throw InvalidArgument("draw_complete_ngon needs n >= 3");
  Graph g = graph::make_complete(n);
  Drawing d = geometry::realize_ngon(g, geometry::identity_assignment(n));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    d.length_class[i] = static_cast<int>(chord_class(n, e.u, e.v));
  }
  Certificate cert;
  cert.claimed_slope_bound = n;
  cert.claimed_length_bound = n / 2;
  cert.claimed_convex = true;
  cert.theorem = Theorem::complete_ngon;
  return {std::move(g), std::move(d), cert};
}

Construction draw_knn(std::size_t n) {
  if (n == 0) throw InvalidArgument("draw_knn needs n >= 1");
  const std::size_t sizes[] = {n, n};
  Graph g = graph::make_complete_multipartite(sizes);
  Certificate cert;
  cert.claimed_slope_bound = n;
  cert.claimed_convex = true;
  cert.theorem = Theorem::knn_polygon;
  if (n == 1) {
    Drawing d = unit_edge(g);
    return {std::move(g), std::move(d), cert};
  }
  geometry::PolygonAssignment a{2 * n, std::vector<std::size_t>(2 * n)};
  for (std::size_t v = 0; v < 2 * n; ++v) a.index[v] = v < n ? 2 * v : 2 * (v - n) + 1;
  Drawing d = geometry::realize_ngon(g, a);
  return {std::move(g), std::move(d), cert};
}

Power2Partition power2_partition(std::size_t p, std::size_t k) {
  if (k < 2 || !std::has_single_bit(k - 1)) throw InvalidArgument("k-1 must be a power of two");
  if (p > 20) throw InvalidArgument("p too large");
  Power2Partition out;
  out.p = p;
  out.k = k;
  out.n = (k - 1) << (p + 1);
  const std::size_t modulus = out.n >> p;  // n / 2^p
  out.parts.assign(k, {});
  out.part_of.assign(out.n, 0);
  for (std::size_t j = 0; j < out.n; ++j) {
    const std::size_t r = j % modulus;
    const std::size_t i = r <= modulus / 2 ? r : modulus - r;
    out.part_of[j] = i;
    out.parts[i].push_back(static_cast<Vertex>(j));
  }
  const std::size_t small = std::size_t{1} << p;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t expected = (i == 0 || i == k - 1) ? small : 2 * small;
    if (out.parts[i].size() != expected) throw ConstructionError("power-of-two partition has wrong part sizes");
  }
  return out;
}

Construction draw_multipartite_power2(std::size_t p, std::size_t k) {
  const auto part = power2_partition(p, k);
  std::vector<graph::Edge> edges;
  for (std::size_t i = 0; i < part.n; ++i) {
    for (std::size_t j = i + 1; j < part.n; ++j) {
      if (part.part_of[i] != part.part_of[j]) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  Graph g(part.n, edges);
  Certificate cert;
  cert.claimed_slope_bound = part.n - (std::size_t{1} << p);
  cert.claimed_convex = true;
  cert.theorem = Theorem::multipartite_power2;
  Drawing d = part.n == 2 ? unit_edge(g) : geometry::realize_ngon(g, geometry::identity_assignment(part.n));
  return {std::move(g), std::move(d), cert};
}

}  // namespace slopeforge::constructions
