#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "slopeforge/graph.hpp"

namespace slopeforge::graph {

// Exact pathwidth of forests and backbone paths, computed by the path
// removal recursion:
//   pw(K_1) = 0,
//   pw(T)   = 1 + min over paths P of pw(T - V(P))   (pw of the empty forest is 0),
//   pw(F)   = max over components.
// The minimum may be taken over leaf-to-leaf paths only. Results are memoised
// per vertex subset, so one solver should be reused for all queries on the
// same forest.
class ForestPathwidth {
 public:
  // Throws InvalidArgument if `forest` contains a cycle.
  explicit ForestPathwidth(const Graph& forest);
  ~ForestPathwidth();
  ForestPathwidth(ForestPathwidth&&) noexcept;
  ForestPathwidth& operator=(ForestPathwidth&&) noexcept;

  const Graph& forest() const noexcept;

  // Pathwidth of the whole forest.
  std::size_t pathwidth() const;
  // Pathwidth of the subforest induced by `vertices`.
  std::size_t pathwidth(std::span<const Vertex> vertices) const;

  // Leaf-to-leaf path P of the tree induced by `subtree` (must be connected)
  // with pw(subtree - P) < pw(subtree): the first such path when leaf pairs
  // (a, b), a < b, are scanned in order. A single vertex is its own backbone.
  std::vector<Vertex> backbone(std::span<const Vertex> subtree) const;

  // First backbone of `subtree` in the same order that passes through `r`,
  // if any.
  std::optional<std::vector<Vertex>> backbone_through(std::span<const Vertex> subtree, Vertex r) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience wrappers over a fresh solver.
std::size_t tree_pathwidth(const Graph& forest);
// Requires a tree (connected, acyclic).
std::vector<Vertex> find_backbone(const Graph& tree);

// True if the tree becomes a path (or empty) after deleting its leaves.
bool is_caterpillar(const Graph& tree);

}  // namespace slopeforge::graph
