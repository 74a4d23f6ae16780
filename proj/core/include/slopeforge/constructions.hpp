#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slopeforge/geometry.hpp"
#include "slopeforge/graph.hpp"
#include "slopeforge/ordering.hpp"

namespace slopeforge::constructions {

using geometry::Drawing;
using graph::Graph;
using graph::Vertex;

// f : V(G) -> V(H) such that each edge of G stays inside a node or maps to an
// edge of H. slot[v] is the corner of the node's polygon that v occupies;
// by default vertices of a node take corners 0,1,... in increasing id order.
class HPartition {
 public:
  // Throws InvalidArgument if `assign` is not a valid H-partition of g or
  // `slot` is not injective per node with values below the width.
  HPartition(const Graph& g, Graph host, std::vector<Vertex> assign, std::vector<std::size_t> slot = {});

  const Graph& host() const noexcept { return host_; }
  const std::vector<Vertex>& assign() const noexcept { return assign_; }
  const std::vector<std::size_t>& slot() const noexcept { return slot_; }
  std::size_t width() const noexcept { return width_; }
  std::vector<Vertex> preimage(Vertex node) const;

 private:
  Graph host_;
  std::vector<Vertex> assign_;
  std::vector<std::size_t> slot_;
  std::size_t width_ = 0;
};

// s distinct slopes, l distinct lengths, t distinct (slope, length) pairs.
struct HostDrawingStats {
  std::size_t s = 0;
  std::size_t l = 0;
  std::size_t t = 0;
};

HostDrawingStats host_drawing_stats(const Drawing& host);

enum class Theorem {
  complete_ngon,
  knn_polygon,
  kab_rows,
  kab_polygon,
  multipartite_power2,
  blow_up,
  bandwidth,
  tree,
  tree_partition,
  one_bend,
};

std::string_view theorem_name(Theorem t);

struct Certificate {
  std::size_t claimed_slope_bound = 0;
  std::optional<std::size_t> claimed_length_bound;
  // Blow-up only: the length bound with ceil(k/2) polygon lengths.
  std::optional<std::size_t> alternate_length_bound;
  bool claimed_plane = false;
  bool claimed_convex = false;
  Theorem theorem = Theorem::complete_ngon;
};

struct Construction {
  Graph graph;
  Drawing drawing;
  Certificate certificate;
  // Tree drawings: the subtree scale factor. Blow-ups: the disc radius.
  double scale = 0.0;
};

// Measurements of a construction against its certificate.
struct CertificateCheck {
  bool ok = true;
  bool valid_drawing = true;
  std::size_t slopes = 0;
  std::size_t lengths = 0;
  std::size_t crossings = 0;
  bool convex = false;
  // Set when lengths exceed the stated bound but not the alternate one.
  bool length_alternate_only = false;
  std::vector<std::string> violations;
};

CertificateCheck check_certificate(const Construction& c);

// The same construction drawn for an isomorphic graph g: vertex v of g takes
// the place of construction vertex to_construction[v]. Throws InvalidArgument
// unless the map is an isomorphism.
Construction relabel(const Construction& c, const Graph& g, std::span<const Vertex> to_construction);

// K_n on the regular n-gon, n >= 3.
Construction draw_complete_ngon(std::size_t n);

// K_{n,n} on the regular 2n-gon with alternating sides. n = 1 is a single
// horizontal edge. Vertices 0..n-1 form one side.
Construction draw_knn(std::size_t n);

// K_{a,b} with 1 <= a <= b, vertices 0..a-1 on the small side. Uses the
// three-row layout when ceil(b/2)+a-1 <= b, otherwise K_{a,b} as a subgraph
// of the alternating K_{b,b} polygon.
Construction draw_kab_rows(std::size_t a, std::size_t b);

// (ceil((a+b-1)/2), min(b, ceil(b/2)+a-1)) for 1 <= a <= b.
std::pair<std::size_t, std::size_t> kab_slope_bounds(std::size_t a, std::size_t b);

// Parts P_0..P_{k-1} of {0..n-1}, n = (k-1) 2^(p+1).
struct Power2Partition {
  std::size_t p = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> part_of;
};

// Throws InvalidArgument unless k >= 2 and k-1 is a power of two.
Power2Partition power2_partition(std::size_t p, std::size_t k);

// Complete k-partite graph on the power-of-two partition, vertex j on corner j
// of the regular n-gon.
Construction draw_multipartite_power2(std::size_t p, std::size_t k);

struct BlowUpOptions {
  std::size_t rotation_candidates = 1024;
  std::size_t max_shrink_iterations = 64;
};

// Replaces each host node by a small regular k-gon carrying its preimage.
// The host drawing must be straight-line. Output is numeric with slope and
// length labels derived from the construction.
Construction blow_up(const Graph& g, const Drawing& host, const HPartition& part, const BlowUpOptions& options = {});

// Path host drawn horizontally with blocks of `o.width()` consecutive
// vertices; vertex i*b+j sits on corner j of block i.
Construction draw_bandwidth(const Graph& g, const graph::VertexOrdering& o);

struct TreeOptions {
  double initial_scale = 0.5;
  double shrink = 0.8;
  std::size_t max_shrink_iterations = 200;
};

// Plane drawing of a forest with max(D-1,1) slopes and 2k-1 length classes
// (k = pathwidth). Paths are drawn exactly on a horizontal line; other
// forests are numeric with slope and length labels. Components are laid out
// left to right with a gap equal to the widest component.
Construction draw_tree(const Graph& forest, const TreeOptions& options = {});

// Draws the forest host with draw_tree and blows it up.
Construction draw_tree_partitioned(const Graph& g, const HPartition& part, const TreeOptions& tree_options = {},
                                   const BlowUpOptions& blow_options = {});

// 1-bend drawing of g with Delta+1 slopes (directions (1,i), i = 0..Delta),
// exact coordinates.
Construction draw_one_bend(const Graph& g);

}  // namespace slopeforge::constructions
