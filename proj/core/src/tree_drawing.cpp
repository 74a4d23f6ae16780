#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/tree.hpp"

namespace slopeforge::constructions {

namespace {

using geometry::DPoint;

constexpr int kLeft = -1;
constexpr int kRight = -2;

// Vertex v sits at anchor + scale^exponent * direction(dir).
struct Placement {
  Vertex v;
  Vertex anchor;
  int dir;
  int exponent;
};

class TreeLayout {
 public:
  TreeLayout(const Graph& forest, std::size_t delta) : forest_(forest), solver_(forest), delta_(delta) {}

  // Records placements for one component, root first.
  std::vector<Placement> layout_component(const std::vector<Vertex>& component) {
    std::vector<Placement> out;
    const Vertex root = solver_.backbone(component).front();
    out.push_back({root, root, 0, 0});
    layout(component, root, 0, out);
    return out;
  }

  std::size_t pathwidth() const { return solver_.pathwidth(); }

  DPoint direction(int dir) const {
    if (dir == kLeft) return {-1.0, 0.0};
    if (dir == kRight) return {1.0, 0.0};
    const double phi = std::numbers::pi / 2 * dir / static_cast<double>(delta_ - 2);
    return {std::sin(phi), -std::cos(phi)};
  }

  int slope_label(int dir) const { return dir < 0 ? static_cast<int>(delta_ - 2) : dir; }

 private:
  std::vector<Vertex> path_between(const std::vector<Vertex>& subtree, Vertex from, Vertex to) const {
    std::vector<char> inside(forest_.vertex_count(), 0);
    for (Vertex v : subtree) inside[v] = 1;
    std::vector<Vertex> parent(forest_.vertex_count(), from);
    std::vector<char> seen(forest_.vertex_count(), 0);
    std::vector<Vertex> queue{from};
    seen[from] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : forest_.neighbors(queue[i])) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          parent[w] = queue[i];
          queue.push_back(w);
        }
      }
    }
    std::vector<Vertex> path;
    for (Vertex v = to; v != from; v = parent[v]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
  }

  void layout(const std::vector<Vertex>& subtree, Vertex r, int exponent, std::vector<Placement>& out) {
    if (subtree.size() <= 1) return;
    std::vector<Vertex> path;
    if (auto through = solver_.backbone_through(subtree, r)) {
      path = std::move(*through);
    } else {
      path = path_between(subtree, r, solver_.backbone(subtree).front());
    }
    auto at = static_cast<std::size_t>(std::find(path.begin(), path.end(), r) - path.begin());
    if (2 * at > path.size() - 1) {
      std::reverse(path.begin(), path.end());
      at = path.size() - 1 - at;
    }
    for (std::size_t i = at + 1; i < path.size(); ++i) out.push_back({path[i], path[i - 1], kRight, exponent});
    for (std::size_t i = at; i-- > 0;) out.push_back({path[i], path[i + 1], kLeft, exponent});

    std::vector<char> inside(forest_.vertex_count(), 0);
    for (Vertex v : subtree) inside[v] = 1;
    for (Vertex v : path) inside[v] = 0;

    struct Child {
      Vertex root;
      std::vector<Vertex> vertices;
    };
    std::vector<std::pair<Vertex, std::vector<Child>>> hanging;
    for (Vertex x : path) {
      std::vector<Child> children;
      for (Vertex y : forest_.neighbors(x)) {
        if (!inside[y]) continue;
        Child c{y, {}};
        std::vector<Vertex> stack{y};
        inside[y] = 0;
        while (!stack.empty()) {
          const Vertex v = stack.back();
          stack.pop_back();
          c.vertices.push_back(v);
          for (Vertex w : forest_.neighbors(v)) {
            if (inside[w]) {
              inside[w] = 0;
              stack.push_back(w);
            }
          }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        children.push_back(std::move(c));
      }
      if (children.size() + 2 > delta_) throw ConstructionError("tree drawing: too many children at a path vertex");
      // Larger subtrees take the steeper slots.
      std::stable_sort(children.begin(), children.end(),
                       [](const Child& a, const Child& b) { return a.vertices.size() > b.vertices.size(); });
      for (std::size_t j = 0; j < children.size(); ++j) {
        out.push_back({children[j].root, x, static_cast<int>(j), exponent});
      }
      hanging.emplace_back(x, std::move(children));
    }
    for (auto& [x, children] : hanging) {
      for (auto& c : children) layout(c.vertices, c.root, exponent + 1, out);
    }
  }

  const Graph& forest_;
  graph::ForestPathwidth solver_;
  std::size_t delta_;
};

Construction draw_paths(const Graph& forest) {
  const auto comps = graph::connected_components(forest);
  std::size_t widest = 0;
  for (const auto& c : comps) widest = std::max(widest, c.size() - 1);
  const long gap = static_cast<long>(std::max<std::size_t>(widest, 1));
  std::vector<geometry::QPoint> pts(forest.vertex_count());
  long x = 0;
  for (const auto& c : comps) {
    Vertex start = c.front();
    for (Vertex v : c) {
      if (forest.degree(v) <= 1) {
        start = v;
        break;
      }
    }
    Vertex prev = start;
    Vertex cur = start;
    for (std::size_t i = 0; i < c.size(); ++i) {
      pts[cur] = {x++, 0};
      Vertex next = cur;
      for (Vertex w : forest.neighbors(cur)) {
        if (w != prev) next = w;
      }
      prev = cur;
      cur = next;
    }
    x += gap - 1;
  }
  Construction out{forest, geometry::make_drawing(forest, std::move(pts)), {}, 0.0};
  out.certificate.claimed_slope_bound = 1;
  out.certificate.claimed_length_bound = forest.edge_count() > 0 ? 1 : 0;
  out.certificate.claimed_plane = true;
  out.certificate.theorem = Theorem::tree;
  return out;
}

}  // namespace

Construction draw_tree(const Graph& forest, const TreeOptions& options) {
  if (!graph::is_forest(forest)) throw InvalidArgument("draw_tree needs a forest");
  const std::size_t delta = forest.max_degree();
  if (delta <= 2) return draw_paths(forest);

  TreeLayout layout(forest, delta);
  const auto comps = graph::connected_components(forest);
  std::vector<std::vector<Placement>> placements;
  for (const auto& c : comps) placements.push_back(layout.layout_component(c));
  const std::size_t k = layout.pathwidth();

  std::map<std::size_t, int> slope_label;
  std::map<std::size_t, int> length_label;
  for (const auto& comp : placements) {
    for (std::size_t i = 1; i < comp.size(); ++i) {
      const auto& p = comp[i];
      const std::size_t e = *forest.edge_index(p.v, p.anchor);
      slope_label[e] = layout.slope_label(p.dir);
      length_label[e] = p.exponent;
    }
  }

  double scale = options.initial_scale;
  for (std::size_t iter = 0; iter < options.max_shrink_iterations; ++iter, scale *= options.shrink) {
    std::vector<DPoint> pts(forest.vertex_count());
    std::vector<std::pair<double, double>> extent;
    for (const auto& comp : placements) {
      double lo = 0;
      double hi = 0;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const auto& p = comp[i];
        if (i == 0) {
          pts[p.v] = {0.0, 0.0};
          continue;
        }
        const double len = std::pow(scale, p.exponent);
        const DPoint dir = layout.direction(p.dir);
        pts[p.v] = {pts[p.anchor].x + len * dir.x, pts[p.anchor].y + len * dir.y};
        lo = std::min(lo, pts[p.v].x);
        hi = std::max(hi, pts[p.v].x);
      }
      extent.emplace_back(lo, hi);
    }
    double widest = 0;
    for (const auto& [lo, hi] : extent) widest = std::max(widest, hi - lo);
    const double gap = std::max(widest, 1.0);
    double cursor = 0;
    for (std::size_t c = 0; c < placements.size(); ++c) {
      const double shift = cursor - extent[c].first;
      for (const auto& p : placements[c]) pts[p.v].x += shift;
      cursor += extent[c].second - extent[c].first + gap;
    }
    Drawing d = geometry::make_drawing(forest, std::move(pts));
    d.slope_class = slope_label;
    d.length_class = length_label;
    if (!geometry::validate_drawing(forest, d).valid || geometry::count_crossings(forest, d) != 0) continue;
    Construction out{forest, std::move(d), {}, scale};
    out.certificate.claimed_slope_bound = std::max<std::size_t>(delta - 1, 1);
    out.certificate.claimed_length_bound = k == 0 ? 0 : 2 * k - 1;
    out.certificate.claimed_plane = true;
    out.certificate.theorem = Theorem::tree;
    return out;
  }
  throw ConstructionError("tree drawing: no scale factor produced a plane drawing");
}

}  // namespace slopeforge::constructions
