#include "slopeforge/tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>

#include "slopeforge/errors.hpp"

namespace slopeforge::graph {

namespace {

// Bit set over the vertices of the host forest; used as memo key.
struct VertexSet {
  std::vector<std::uint64_t> words;

  explicit VertexSet(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void insert(Vertex v) { words[v / 64] |= std::uint64_t{1} << (v % 64); }
  bool contains(Vertex v) const { return (words[v / 64] >> (v % 64)) & 1u; }
  bool operator==(const VertexSet&) const = default;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : s.words) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Smallest tree with pathwidth k has min_size(k) vertices: 1, 2, 7, 22, ...
std::size_t min_size_for_pathwidth(std::size_t k) {
  if (k == 0) return 1;
  std::size_t s = 2;
  for (std::size_t i = 1; i < k; ++i) s = 3 * s + 1;
  return s;
}

}  // namespace

struct ForestPathwidth::Impl {
  Graph forest;
  mutable std::unordered_map<VertexSet, std::size_t, VertexSetHash> memo;

  explicit Impl(const Graph& g) : forest(g) {}

  VertexSet to_set(std::span<const Vertex> vs) const {
    VertexSet s(forest.vertex_count());
    for (Vertex v : vs) {
      if (v >= forest.vertex_count()) throw InvalidArgument("vertex out of range");
      s.insert(v);
    }
    return s;
  }

  std::size_t degree_in(Vertex v, const VertexSet& s) const {
    std::size_t d = 0;
    for (Vertex w : forest.neighbors(v)) d += s.contains(w);
    return d;
  }

  // Components of `vertices` minus `removed`, restricted to `within`.
  std::vector<std::vector<Vertex>> components(std::span<const Vertex> vertices, const VertexSet& within,
                                              const VertexSet& removed) const {
    VertexSet seen(forest.vertex_count());
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s : vertices) {
      if (removed.contains(s) || seen.contains(s)) continue;
      std::vector<Vertex> comp;
      seen.insert(s);
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (Vertex w : forest.neighbors(v)) {
          if (within.contains(w) && !removed.contains(w) && !seen.contains(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool caterpillar(std::span<const Vertex> tree, const VertexSet& s) const {
    for (Vertex v : tree) {
      if (degree_in(v, s) <= 1) continue;
      std::size_t spine_neighbors = 0;
      for (Vertex w : forest.neighbors(v)) {
        if (s.contains(w) && degree_in(w, s) > 1) ++spine_neighbors;
      }
      if (spine_neighbors > 2) return false;
    }
    return true;
  }

  // Parent pointers of a traversal of the subtree rooted at `root`.
  std::vector<Vertex> parents_from(Vertex root, const VertexSet& s) const {
    std::vector<Vertex> parent(forest.vertex_count(), std::numeric_limits<Vertex>::max());
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : forest.neighbors(v)) {
        if (s.contains(w) && parent[w] == std::numeric_limits<Vertex>::max()) {
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    return parent;
  }

  // Calls visit(path) for every leaf-to-leaf path (a < b), path ordered from a.
  template <typename Visit>
  void for_each_leaf_path(std::span<const Vertex> tree, const VertexSet& s, Visit&& visit) const {
    std::vector<Vertex> leaves;
    for (Vertex v : tree) {
      if (degree_in(v, s) <= 1) leaves.push_back(v);
    }
    std::sort(leaves.begin(), leaves.end());
    std::vector<Vertex> path;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const auto parent = parents_from(leaves[i], s);
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        path.clear();
        for (Vertex v = leaves[j];; v = parent[v]) {
          path.push_back(v);
          if (v == leaves[i]) break;
        }
        std::reverse(path.begin(), path.end());
        if (!visit(path)) return;
      }
    }
  }

  // pw(tree - path), with pw of the empty forest taken as 0. Stops early and
  // returns `cap` once some component reaches it.
  std::size_t remainder_pathwidth(std::span<const Vertex> tree, const VertexSet& s,
                                  std::span<const Vertex> path, std::size_t cap) const {
    VertexSet removed(forest.vertex_count());
    for (Vertex v : path) removed.insert(v);
    std::size_t worst = 0;
    auto comps = components(tree, s, removed);
    // Largest components first: they decide most often.
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& c : comps) {
      if (c.size() < min_size_for_pathwidth(worst + 1)) continue;
      worst = std::max(worst, tree_pw(c));
      if (worst >= cap) return cap;
    }
    return worst;
  }

  // Pathwidth of a connected vertex set.
  std::size_t tree_pw(std::span<const Vertex> tree) const {
    if (tree.size() <= 1) return 0;
    VertexSet s = to_set(tree);
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::size_t result = 0;
    if (caterpillar(tree, s)) {
      result = 1;
    } else {
      // pw >= k+1 iff some vertex has three branches of pw >= k, so
      // pw = 1 + max over v of the third largest branch pathwidth.
      result = 2;
      VertexSet removed(forest.vertex_count());
      for (Vertex v : tree) {
        if (degree_in(v, s) < 3) continue;
        removed.insert(v);
        auto branches = components(tree, s, removed);
        removed = VertexSet(forest.vertex_count());
        std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        // Need three branches of pw >= result to improve.
        if (branches[2].size() < min_size_for_pathwidth(result)) continue;
        std::vector<std::size_t> pws;
        for (const auto& b : branches) {
          if (b.size() < min_size_for_pathwidth(result)) break;
          pws.push_back(tree_pw(b));
        }
        if (pws.size() < 3) continue;
        std::nth_element(pws.begin(), pws.begin() + 2, pws.end(), std::greater<>());
        result = std::max(result, pws[2] + 1);
      }
    }
    memo.emplace(std::move(s), result);
    return result;
  }

  std::size_t forest_pw(std::span<const Vertex> vertices) const {
    VertexSet s = to_set(vertices);
    VertexSet none(forest.vertex_count());
    std::size_t worst = 0;
    for (const auto& c : components(vertices, s, none)) worst = std::max(worst, tree_pw(c));
    return worst;
  }

  void require_connected(std::span<const Vertex> subtree) const {
    if (subtree.empty()) throw InvalidArgument("backbone of an empty tree");
    VertexSet s = to_set(subtree);
    VertexSet none(forest.vertex_count());
    if (components(subtree, s, none).size() != 1) throw InvalidArgument("backbone requires a connected subtree");
  }

  std::optional<std::vector<Vertex>> best_backbone(std::span<const Vertex> subtree,
                                                    std::optional<Vertex> through) const {
    require_connected(subtree);
    if (subtree.size() == 1) {
      if (through && *through != subtree.front()) return std::nullopt;
      return std::vector<Vertex>{subtree.front()};
    }
    std::vector<Vertex> sorted(subtree.begin(), subtree.end());
    std::sort(sorted.begin(), sorted.end());
    const VertexSet s = to_set(sorted);
    const std::size_t k = tree_pw(sorted);
    // First leaf path in (a, b) order whose removal lowers the pathwidth.
    std::optional<std::vector<Vertex>> best;
    for_each_leaf_path(sorted, s, [&](std::span<const Vertex> path) {
      if (through && std::find(path.begin(), path.end(), *through) == path.end()) return true;
      if (remainder_pathwidth(sorted, s, path, k) >= k) return true;
      best.emplace(path.begin(), path.end());
      return false;
    });
    return best;
  }
};

ForestPathwidth::ForestPathwidth(const Graph& forest) : impl_(std::make_unique<Impl>(forest)) {
  if (!is_forest(forest)) throw InvalidArgument("pathwidth solver requires a forest");
}
ForestPathwidth::~ForestPathwidth() = default;
ForestPathwidth::ForestPathwidth(ForestPathwidth&&) noexcept = default;
ForestPathwidth& ForestPathwidth::operator=(ForestPathwidth&&) noexcept = default;

const Graph& ForestPathwidth::forest() const noexcept { return impl_->forest; }

std::size_t ForestPathwidth::pathwidth() const {
  std::vector<Vertex> all(impl_->forest.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return impl_->forest_pw(all);
}

std::size_t ForestPathwidth::pathwidth(std::span<const Vertex> vertices) const {
  return impl_->forest_pw(vertices);
}

std::vector<Vertex> ForestPathwidth::backbone(std::span<const Vertex> subtree) const {
  auto found = impl_->best_backbone(subtree, std::nullopt);
  if (!found) throw Error("no backbone found; pathwidth recursion is inconsistent");
  return *found;
}

std::optional<std::vector<Vertex>> ForestPathwidth::backbone_through(std::span<const Vertex> subtree,
                                                                    Vertex r) const {
  return impl_->best_backbone(subtree, r);
}

std::size_t tree_pathwidth(const Graph& forest) { return ForestPathwidth(forest).pathwidth(); }

std::vector<Vertex> find_backbone(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("find_backbone requires a tree");
  ForestPathwidth solver(tree);
  std::vector<Vertex> all(tree.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return solver.backbone(all);
}

bool is_caterpillar(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("is_caterpillar requires a tree");
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) <= 1) continue;
    std::size_t spine = 0;
    for (Vertex w : tree.neighbors(v)) spine += tree.degree(w) > 1;
    if (spine > 2) return false;
  }
  return true;
}

}  // namespace slopeforge::graph
