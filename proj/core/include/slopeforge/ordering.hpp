#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slopeforge/graph.hpp"

namespace slopeforge::graph {

// A permutation of the vertices of a graph. width() is the largest position
// gap across an edge; it is computed at construction.
class VertexOrdering {
 public:
  // Throws InvalidArgument unless `order` is a permutation of g's vertices.
  VertexOrdering(const Graph& g, std::vector<Vertex> order);

  const std::vector<Vertex>& order() const noexcept { return order_; }
  // position()[v] is the index of v in order().
  const std::vector<std::size_t>& position() const noexcept { return position_; }
  std::size_t width() const noexcept { return width_; }

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::size_t width_ = 0;
};

std::size_t ordering_width(const Graph& g, std::span<const Vertex> order);

// Sequence of disjoint vertex blocks covering V(G) such that every edge lies
// inside a block or joins consecutive blocks.
class PathPartition {
 public:
  // Throws InvalidArgument if the blocks do not form a valid path-partition.
  PathPartition(const Graph& g, std::vector<std::vector<Vertex>> blocks);

  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  std::size_t width() const noexcept { return width_; }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::size_t width_ = 0;
};

inline constexpr std::size_t kDefaultBandwidthNodeLimit = 20;

// Minimum-width ordering by branch and bound. Throws SizeLimitError when
// g has more than node_limit vertices.
VertexOrdering bandwidth_exact(const Graph& g, std::size_t node_limit = kDefaultBandwidthNodeLimit);

// Breadth-first level ordering (Cuthill-McKee style) from a pseudo-peripheral
// start vertex. Components are ordered one after another.
VertexOrdering bandwidth_heuristic(const Graph& g);

// Consecutive blocks of size max(width,1); the last block may be smaller.
PathPartition path_partition_from_ordering(const Graph& g, const VertexOrdering& o);

// Lists the blocks in sequence (each block ascending). Width <= 2k-1.
VertexOrdering ordering_from_path_partition(const Graph& g, const PathPartition& p);

}  // namespace slopeforge::graph
