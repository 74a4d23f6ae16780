#include <algorithm>
#include <set>
#include <string>

#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"

namespace slopeforge::constructions {

HPartition::HPartition(const Graph& g, Graph host, std::vector<Vertex> assign, std::vector<std::size_t> slot)
    : host_(std::move(host)), assign_(std::move(assign)), slot_(std::move(slot)) {
  const std::size_t n = g.vertex_count();
  if (assign_.size() != n) throw InvalidArgument("H-partition must assign every vertex");
  std::vector<std::size_t> load(host_.vertex_count(), 0);
  for (Vertex v : assign_) {
    if (v >= host_.vertex_count()) throw InvalidArgument("H-partition maps to an unknown host node");
    width_ = std::max(width_, ++load[v]);
  }
  for (const auto& e : g.edges()) {
    const Vertex x = assign_[e.u];
    const Vertex y = assign_[e.v];
    if (x != y && !host_.has_edge(x, y)) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " maps to a non-edge of the host");
    }
  }
  if (slot_.empty()) {
    slot_.assign(n, 0);
    std::vector<std::size_t> next(host_.vertex_count(), 0);
    for (std::size_t v = 0; v < n; ++v) slot_[v] = next[assign_[v]]++;
    return;
  }
  if (slot_.size() != n) throw InvalidArgument("H-partition slots must cover every vertex");
  std::set<std::pair<Vertex, std::size_t>> used;
  for (std::size_t v = 0; v < n; ++v) {
    if (slot_[v] >= width_) throw InvalidArgument("H-partition slot exceeds the width");
    if (!used.emplace(assign_[v], slot_[v]).second) throw InvalidArgument("H-partition slots collide");
  }
}

std::vector<Vertex> HPartition::preimage(Vertex node) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < assign_.size(); ++v) {
    if (assign_[v] == node) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

HostDrawingStats host_drawing_stats(const Drawing& host) {
  if (host.has_bends()) throw InvalidArgument("host drawing must be straight-line");
  const auto slopes = geometry::classify_slopes(host);
  const auto lengths = geometry::classify_lengths(host);
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < slopes.of_segment.size(); ++i) pairs.emplace(slopes.of_segment[i], lengths.of_segment[i]);
  return {slopes.count, lengths.count, pairs.size()};
}

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::complete_ngon: return "complete-ngon";
    case Theorem::knn_polygon: return "knn-polygon";
    case Theorem::kab_rows: return "kab-rows";
    case Theorem::kab_polygon: return "kab-polygon";
    case Theorem::multipartite_power2: return "multipartite-power2";
    case Theorem::blow_up: return "blow-up";
    case Theorem::bandwidth: return "bandwidth";
    case Theorem::tree: return "tree";
    case Theorem::tree_partition: return "tree-partition";
    case Theorem::one_bend: return "one-bend";
  }
  return "unknown";
}

CertificateCheck check_certificate(const Construction& c) {
  CertificateCheck out;
  auto violate = [&](std::string what) {
    out.ok = false;
    out.violations.push_back(std::move(what));
  };
  const auto report = geometry::validate_drawing(c.graph, c.drawing);
  out.valid_drawing = report.valid;
  for (const auto& issue : report.issues) violate("invalid drawing: " + issue);
  if (!report.valid) return out;

  const auto& cert = c.certificate;
  out.slopes = geometry::count_slopes(c.drawing);
  out.lengths = geometry::count_lengths(c.drawing);
  out.crossings = geometry::count_crossings(c.graph, c.drawing);
  out.convex = geometry::is_convex_drawing(c.graph, c.drawing);
  if (out.slopes > cert.claimed_slope_bound) {
    violate("slopes " + std::to_string(out.slopes) + " exceed claimed " + std::to_string(cert.claimed_slope_bound));
  }
  if (cert.claimed_length_bound && out.lengths > *cert.claimed_length_bound) {
    out.length_alternate_only = cert.alternate_length_bound && out.lengths <= *cert.alternate_length_bound;
    violate("lengths " + std::to_string(out.lengths) + " exceed claimed " +
            std::to_string(*cert.claimed_length_bound));
  }
  if (cert.claimed_plane && out.crossings != 0) violate(std::to_string(out.crossings) + " crossings in a plane claim");
  if (cert.claimed_convex && !out.convex) violate("drawing is not convex");
  return out;
}

Construction relabel(const Construction& c, const Graph& g, std::span<const Vertex> to_construction) {
  const std::size_t n = g.vertex_count();
  if (to_construction.size() != n || c.graph.vertex_count() != n || c.graph.edge_count() != g.edge_count()) {
    throw InvalidArgument("relabel: graphs differ in size");
  }
  std::vector<char> hit(n, 0);
  for (Vertex v : to_construction) {
    if (v >= n || hit[v]) throw InvalidArgument("relabel: map is not a bijection");
    hit[v] = 1;
  }
  std::vector<std::size_t> source(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const auto j = c.graph.edge_index(to_construction[e.u], to_construction[e.v]);
    if (!j) throw InvalidArgument("relabel: map is not an isomorphism");
    source[i] = *j;
  }
  Construction out{g, {}, c.certificate, c.scale};
  out.drawing.edges = g.edges();
  std::visit(
      [&](const auto& layout) {
        std::decay_t<decltype(layout)> mapped;
        for (std::size_t v = 0; v < n; ++v) mapped.vertices.push_back(layout.vertices[to_construction[v]]);
        for (std::size_t i = 0; i < source.size(); ++i) {
          if (auto it = layout.bends.find(source[i]); it != layout.bends.end()) mapped.bends[i] = it->second;
        }
        out.drawing.layout = std::move(mapped);
      },
      c.drawing.layout);
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (auto it = c.drawing.slope_class.find(source[i]); it != c.drawing.slope_class.end()) {
      out.drawing.slope_class[i] = it->second;
    }
    if (auto it = c.drawing.length_class.find(source[i]); it != c.drawing.length_class.end()) {
      out.drawing.length_class[i] = it->second;
    }
  }
  return out;
}

}  // namespace slopeforge::constructions
