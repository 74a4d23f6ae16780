#include "slopeforge/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

#include "slopeforge/errors.hpp"

namespace slopeforge::graph {

std::size_t ordering_width(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::size_t width = 0;
  for (const Edge& e : g.edges()) {
    const std::size_t a = pos[e.u];
    const std::size_t b = pos[e.v];
    width = std::max(width, a > b ? a - b : b - a);
  }
  return width;
}

VertexOrdering::VertexOrdering(const Graph& g, std::vector<Vertex> order)
    : order_(std::move(order)), position_(g.vertex_count(), std::numeric_limits<std::size_t>::max()) {
  if (order_.size() != g.vertex_count()) throw InvalidArgument("ordering length differs from vertex count");
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    if (v >= g.vertex_count() || position_[v] != std::numeric_limits<std::size_t>::max()) {
      throw InvalidArgument("ordering is not a permutation of the vertices");
    }
    position_[v] = i;
  }
  width_ = ordering_width(g, order_);
}

PathPartition::PathPartition(const Graph& g, std::vector<std::vector<Vertex>> blocks)
    : blocks_(std::move(blocks)) {
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> block_of(g.vertex_count(), none);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw InvalidArgument("path-partition blocks must be non-empty");
    width_ = std::max(width_, blocks_[b].size());
    for (Vertex v : blocks_[b]) {
      if (v >= g.vertex_count() || block_of[v] != none) {
        throw InvalidArgument("path-partition blocks are not disjoint or out of range");
      }
      block_of[v] = b;
    }
  }
  if (std::find(block_of.begin(), block_of.end(), none) != block_of.end()) {
    throw InvalidArgument("path-partition does not cover every vertex");
  }
  for (const Edge& e : g.edges()) {
    const std::size_t a = block_of[e.u];
    const std::size_t b = block_of[e.v];
    if ((a > b ? a - b : b - a) > 1) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} spans non-consecutive blocks");
    }
  }
}

namespace {

// Decides whether the component (local ids 0..n-1) admits an ordering of
// width <= b. Vertices are placed left to right; each unplaced vertex with a
// placed neighbour carries a deadline (latest legal position), and the sorted
// deadlines must fit the remaining slots.
class BandwidthSearch {
 public:
  BandwidthSearch(const Graph& g, std::size_t b) : g_(g), b_(b), n_(g.vertex_count()) {}

  bool run(std::vector<Vertex>& out) {
    pos_.assign(n_, kUnplaced);
    order_.clear();
    failed_.clear();
    // Reversal symmetry is not exploited; starting points are tried in
    // order of increasing degree.
    std::vector<Vertex> starts(n_);
    std::iota(starts.begin(), starts.end(), Vertex{0});
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (Vertex s : starts) {
      place(s);
      if (extend()) {
        out = order_;
        return true;
      }
      unplace(s);
    }
    return false;
  }

 private:
  static constexpr std::size_t kUnplaced = std::numeric_limits<std::size_t>::max();

  void place(Vertex v) {
    pos_[v] = order_.size();
    order_.push_back(v);
  }
  void unplace(Vertex v) {
    pos_[v] = kUnplaced;
    order_.pop_back();
  }

  std::size_t deadline(Vertex v) const {
    std::size_t d = kUnplaced;
    for (Vertex w : g_.neighbors(v)) {
      if (pos_[w] != kUnplaced) d = std::min(d, pos_[w] + b_);
    }
    return d;
  }

  bool has_unplaced_neighbor(Vertex v) const {
    for (Vertex w : g_.neighbors(v)) {
      if (pos_[w] == kUnplaced) return true;
    }
    return false;
  }

  std::string state_key() const {
    std::uint64_t mask = 0;
    for (Vertex v : order_) mask |= std::uint64_t{1} << v;
    std::string key(reinterpret_cast<const char*>(&mask), sizeof mask);
    const std::size_t p = order_.size();
    const std::size_t lo = p > b_ ? p - b_ : 0;
    for (std::size_t i = lo; i < p; ++i) {
      const Vertex v = order_[i];
      key.push_back(has_unplaced_neighbor(v) ? static_cast<char>(v) : static_cast<char>(-1));
    }
    return key;
  }

  bool extend() {
    const std::size_t p = order_.size();
    if (p == n_) return true;
    std::vector<std::pair<std::size_t, Vertex>> candidates;
    std::vector<std::size_t> deadlines;
    for (Vertex v = 0; v < n_; ++v) {
      if (pos_[v] != kUnplaced) continue;
      const std::size_t d = deadline(v);
      if (d < p) return false;
      candidates.emplace_back(d, v);
      if (d != kUnplaced) deadlines.push_back(d);
    }
    std::sort(deadlines.begin(), deadlines.end());
    for (std::size_t i = 0; i < deadlines.size(); ++i) {
      if (deadlines[i] < p + i) return false;
    }
    const bool use_memo = n_ <= 64;
    std::string key;
    if (use_memo) {
      key = state_key();
      if (failed_.contains(key)) return false;
    }
    std::sort(candidates.begin(), candidates.end());
    // A vertex whose deadline is now must go here.
    if (!candidates.empty() && candidates.front().first == p) candidates.resize(1);
    for (const auto& [d, v] : candidates) {
      place(v);
      if (extend()) return true;
      unplace(v);
    }
    if (use_memo) failed_.insert(std::move(key));
    return false;
  }

  const Graph& g_;
  std::size_t b_;
  std::size_t n_;
  std::vector<std::size_t> pos_;
  std::vector<Vertex> order_;
  std::unordered_set<std::string> failed_;
};

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex s) {
  std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> queue;
  dist[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> cuthill_mckee(const Graph& g, Vertex start) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<Vertex> queue;
  queue.push(start);
  seen[start] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    order.push_back(v);
    std::vector<Vertex> next;
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    for (Vertex w : next) queue.push(w);
  }
  return order;
}

Vertex pseudo_peripheral(const Graph& g) {
  Vertex v = 0;
  for (Vertex u = 1; u < g.vertex_count(); ++u) {
    if (g.degree(u) < g.degree(v)) v = u;
  }
  std::size_t ecc = 0;
  for (;;) {
    auto dist = bfs_distances(g, v);
    std::size_t far = 0;
    for (std::size_t d : dist) far = std::max(far, d);
    if (far <= ecc && ecc != 0) return v;
    ecc = far;
    Vertex best = v;
    bool found = false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (dist[u] == far && (!found || g.degree(u) < g.degree(best))) {
        best = u;
        found = true;
      }
    }
    if (best == v) return v;
    v = best;
  }
}

std::vector<Vertex> heuristic_component(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return std::vector<Vertex>(n, 0);
  std::vector<Vertex> best = cuthill_mckee(g, pseudo_peripheral(g));
  std::size_t best_width = ordering_width(g, best);
  if (n <= 64) {
    for (Vertex s = 0; s < n; ++s) {
      auto candidate = cuthill_mckee(g, s);
      const std::size_t w = ordering_width(g, candidate);
      if (w < best_width) {
        best_width = w;
        best = std::move(candidate);
      }
    }
  }
  return best;
}

std::size_t bandwidth_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  std::size_t lb = (g.max_degree() + 1) / 2;
  std::size_t diameter = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) diameter = std::max(diameter, d);
  }
  if (diameter > 0) lb = std::max(lb, (g.vertex_count() - 1 + diameter - 1) / diameter);
  return std::max<std::size_t>(lb, 1);
}

template <typename PerComponent>
VertexOrdering by_components(const Graph& g, PerComponent&& solve) {
  std::vector<Vertex> order;
  order.reserve(g.vertex_count());
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    for (Vertex local : solve(sub)) order.push_back(comp[local]);
  }
  return VertexOrdering(g, std::move(order));
}

}  // namespace

VertexOrdering bandwidth_exact(const Graph& g, std::size_t node_limit) {
  if (g.vertex_count() > node_limit) {
    throw SizeLimitError("bandwidth_exact: " + std::to_string(g.vertex_count()) +
                         " vertices exceeds node limit " + std::to_string(node_limit));
  }
  if (g.vertex_count() > 64) throw SizeLimitError("bandwidth_exact supports at most 64 vertices");
  return by_components(g, [](const Graph& sub) {
    std::vector<Vertex> best = heuristic_component(sub);
    const std::size_t upper = ordering_width(sub, best);
    for (std::size_t b = bandwidth_lower_bound(sub); b < upper; ++b) {
      std::vector<Vertex> found;
      if (BandwidthSearch(sub, b).run(found)) return found;
    }
    return best;
  });
}

VertexOrdering bandwidth_heuristic(const Graph& g) {
  return by_components(g, [](const Graph& sub) { return heuristic_component(sub); });
}

PathPartition path_partition_from_ordering(const Graph& g, const VertexOrdering& o) {
  const std::size_t b = std::max<std::size_t>(o.width(), 1);
  std::vector<std::vector<Vertex>> blocks;
  for (std::size_t i = 0; i < o.order().size(); i += b) {
    const std::size_t end = std::min(i + b, o.order().size());
    blocks.emplace_back(o.order().begin() + static_cast<std::ptrdiff_t>(i),
                        o.order().begin() + static_cast<std::ptrdiff_t>(end));
  }
  return PathPartition(g, std::move(blocks));
}

VertexOrdering ordering_from_path_partition(const Graph& g, const PathPartition& p) {
  std::vector<Vertex> order;
  order.reserve(g.vertex_count());
  for (const auto& block : p.blocks()) {
    std::vector<Vertex> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    order.insert(order.end(), sorted.begin(), sorted.end());
  }
  return VertexOrdering(g, std::move(order));
}

}  // namespace slopeforge::graph
