#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slopeforge::graph {

using Vertex = std::uint32_t;

// Unordered edge stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices {0..n-1}. Immutable after construction.
// Edges are kept in insertion order; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws InvalidArgument on loops, duplicates, or out-of-range ids.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  std::size_t max_degree() const noexcept;
  // 0 for the empty graph.
  std::size_t min_degree() const noexcept;

  // Index of edge {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  // Same graph with edges sorted lexicographically.
  Graph canonical() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Re-derives adjacency from the edge list and compares; used by tests.
bool adjacency_consistent(const Graph& g);

// Connected components, each sorted ascending; components ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

// Subgraph induced by `vertices` (relabelled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Subdivision G': every edge e=vw becomes v - x_e - w with x_e = n + index(e).
Graph subdivide(const Graph& g);

// If g is complete multipartite with at least two parts, returns the parts
// (each sorted, parts ordered by least vertex).
std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g);

// ---- generators -----------------------------------------------------------

Graph make_complete(std::size_t n);
Graph make_complete_multipartite(std::span<const std::size_t> part_sizes);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_grid(std::size_t rows, std::size_t cols);
Graph make_petersen();
// Complete binary tree with 2^levels - 1 vertices, heap numbered.
Graph make_complete_binary_tree(std::size_t levels);
// Spider: one centre with `legs` paths of `leg_length` vertices each.
Graph make_spider(std::size_t legs, std::size_t leg_length);
// Random tree by attaching vertex i to a uniformly chosen earlier vertex of
// degree < max_degree. Deterministic in `seed`.
Graph make_random_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed);
// Erdos-Renyi style graph, edges dropped where they would exceed max_degree.
Graph make_random_graph(std::size_t n, double p, std::size_t max_degree, std::uint64_t seed);

// ---- edge-list text format ------------------------------------------------
// Header "n m" followed by m lines "u v" with 0-based ids. Blank lines and
// lines starting with '#' are ignored.

Graph parse_graph(std::string_view text);
// Canonical form: sorted edges.
std::string serialize_graph(const Graph& g);

}  // namespace slopeforge::graph
