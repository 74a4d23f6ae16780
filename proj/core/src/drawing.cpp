#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "detail/exact_kernel.hpp"
#include "detail/segments.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/geometry.hpp"

namespace slopeforge::geometry {

namespace {

using detail::ExactKernel;
using detail::SegmentView;

constexpr double kUnitRoundoff = 0x1.0p-53;
// Multiplier on the unit roundoff for per-measurement error estimates.
constexpr double kErrorScale = 16.0;

std::vector<std::optional<int>> segment_labels(const Drawing& d, const std::map<std::size_t, int>& labels,
                                               std::size_t segments, const char* what) {
  std::vector<std::optional<int>> out(segments);
  if (labels.empty()) return out;
  if (d.has_bends()) throw InvalidArgument(std::string(what) + " labels are not supported on bent drawings");
  if (labels.size() != d.edges.size()) throw InvalidArgument(std::string(what) + " labels must cover every edge");
  for (const auto& [edge, label] : labels) {
    if (edge >= segments) throw InvalidArgument(std::string(what) + " label on unknown edge");
    out[edge] = label;
  }
  return out;
}

// ---- numeric clustering ---------------------------------------------------

struct Item {
  double value;
  std::size_t id;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

[[noreturn]] void ambiguous(const char* what, double a, double b, double gap) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " values " << a << " and " << b << " differ by " << gap << ", inside the ambiguity band ("
      << kAngleTolerance << ", " << kAngleTolerance * kAmbiguityFactor
      << "); use exact coordinates or class labels";
  throw PrecisionError(msg.str());
}

// Clusters values at tolerance kAngleTolerance; `period` > 0 makes the
// domain circular. Returns class id per value, ids ordered by value.
std::vector<int> cluster_values(const std::vector<double>& values, double period, const char* what,
                                std::size_t& count, std::vector<double>& representative) {
  const double tol = kAngleTolerance;
  const double band = kAngleTolerance * kAmbiguityFactor;
  std::vector<Item> items;
  items.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) items.push_back({values[i], i});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.value < b.value; });
  UnionFind uf(items.size());
  auto visit = [&](std::size_t i, std::size_t j, double gap) {
    if (gap <= tol) {
      uf.unite(i, j);
    } else if (gap < band) {
      ambiguous(what, items[i].value, items[j].value, gap);
    }
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size() && items[j].value - items[i].value < band; ++j) {
      visit(i, j, items[j].value - items[i].value);
    }
  }
  if (period > 0) {
    for (std::size_t i = items.size(); i-- > 0 && items[i].value > period - band;) {
      for (std::size_t j = 0; j < i && items[j].value < band; ++j) {
        visit(i, j, items[j].value + period - items[i].value);
      }
    }
  }
  std::vector<int> root_class(items.size(), -1);
  std::vector<int> out(values.size(), -1);
  count = 0;
  representative.clear();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<int>(count++);
      representative.push_back(items[i].value);
    }
    out[items[i].id] = root_class[r];
  }
  return out;
}

double circular_gap(double a, double b, double period) {
  double d = std::abs(a - b);
  if (period > 0) {
    d = std::fmod(d, period);
    d = std::min(d, period - d);
  }
  return d;
}

// Numeric classification with optional labels. values/errors per segment.
Classes classify_numeric(const std::vector<double>& values, const std::vector<double>& errors,
                         const std::vector<std::optional<int>>& labels, double period, const char* what) {
  Classes out;
  const bool labelled = !labels.empty() && labels.front().has_value();
  if (!labelled) {
    out.of_segment = cluster_values(values, period, what, out.count, out.representative);
    return out;
  }
  // One representative per label: the member with the smallest error bound.
  std::map<int, std::size_t> best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = best.emplace(*labels[i], i);
    if (!inserted && errors[i] < errors[it->second]) it->second = i;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t rep = best.at(*labels[i]);
    const double allowed = std::max(kAngleTolerance, errors[i] + errors[rep]);
    if (circular_gap(values[i], values[rep], period) > allowed) {
      std::ostringstream msg;
      msg << what << " class " << *labels[i] << " is inconsistent: segments " << rep << " and " << i
          << " differ by " << circular_gap(values[i], values[rep], period);
      throw Error(msg.str());
    }
  }
  std::vector<double> rep_values;
  std::vector<int> label_order;
  for (const auto& [label, idx] : best) {
    label_order.push_back(label);
    rep_values.push_back(values[idx]);
  }
  const auto rep_class = cluster_values(rep_values, period, what, out.count, out.representative);
  std::map<int, int> label_class;
  for (std::size_t i = 0; i < label_order.size(); ++i) label_class[label_order[i]] = rep_class[i];
  out.of_segment.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.of_segment[i] = label_class.at(*labels[i]);
  return out;
}

double max_abs_coordinate(const std::vector<DPoint>& pts) {
  double m = std::numeric_limits<double>::min();
  for (const auto& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

double segment_length(const DPoint& a, const DPoint& b) { return std::hypot(b.x - a.x, b.y - a.y); }

template <typename Key, typename Measure>
Classes classify_exact(const SegmentView<QPoint>& view, const std::vector<std::optional<int>>& labels,
                       Measure&& measure, const char* what) {
  std::vector<Key> keys;
  keys.reserve(view.segments.size());
  for (const auto& s : view.segments) keys.push_back(measure(view.points[s[0]], view.points[s[1]]));
  std::map<int, std::size_t> first_of_label;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!labels[i]) continue;
    auto [it, inserted] = first_of_label.emplace(*labels[i], i);
    if (!inserted && !(keys[it->second] == keys[i])) {
      throw Error(std::string(what) + " class " + std::to_string(*labels[i]) + " is inconsistent");
    }
  }
  std::map<Key, int> ids;
  for (const auto& k : keys) ids.emplace(k, 0);
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  Classes out;
  out.count = ids.size();
  for (const auto& k : keys) out.of_segment.push_back(ids.at(k));
  return out;
}

}  // namespace

Classes classify_slopes(const Drawing& d) {
  if (const auto* ex = std::get_if<ExactLayout>(&d.layout)) {
    const auto view = detail::make_view(*ex, d.edges);
    const auto labels = segment_labels(d, d.slope_class, view.segments.size(), "slope");
    Classes out = classify_exact<ExactSlope>(
        view, labels, [](const QPoint& a, const QPoint& b) { return slope_of(a, b); }, "slope");
    std::vector<ExactSlope> reps(out.count);
    for (std::size_t i = 0; i < view.segments.size(); ++i) {
      reps[static_cast<std::size_t>(out.of_segment[i])] =
          slope_of(view.points[view.segments[i][0]], view.points[view.segments[i][1]]);
    }
    for (const auto& s : reps) out.representative.push_back(to_angle(s));
    return out;
  }
  const auto view = detail::make_view(d.numeric(), d.edges);
  const auto labels = segment_labels(d, d.slope_class, view.segments.size(), "slope");
  const double m = max_abs_coordinate(view.points);
  std::vector<double> values;
  std::vector<double> errors;
  for (const auto& s : view.segments) {
    const auto& a = view.points[s[0]];
    const auto& b = view.points[s[1]];
    values.push_back(slope_of(a, b).angle);
    errors.push_back(kErrorScale * kUnitRoundoff * m / segment_length(a, b));
  }
  return classify_numeric(values, errors, labels, std::numbers::pi, "slope");
}

Classes classify_lengths(const Drawing& d) {
  if (const auto* ex = std::get_if<ExactLayout>(&d.layout)) {
    const auto view = detail::make_view(*ex, d.edges);
    const auto labels = segment_labels(d, d.length_class, view.segments.size(), "length");
    auto squared = [](const QPoint& a, const QPoint& b) {
      Rational dx = b.x - a.x;
      Rational dy = b.y - a.y;
      return Rational(dx * dx + dy * dy);
    };
    Classes out = classify_exact<Rational>(view, labels, squared, "length");
    out.representative.assign(out.count, 0.0);
    for (std::size_t i = 0; i < view.segments.size(); ++i) {
      out.representative[static_cast<std::size_t>(out.of_segment[i])] =
          std::sqrt(squared(view.points[view.segments[i][0]], view.points[view.segments[i][1]]).get_d());
    }
    return out;
  }
  const auto view = detail::make_view(d.numeric(), d.edges);
  const auto labels = segment_labels(d, d.length_class, view.segments.size(), "length");
  const double m = max_abs_coordinate(view.points);
  std::vector<double> values;
  std::vector<double> errors;
  for (const auto& s : view.segments) {
    const double len = segment_length(view.points[s[0]], view.points[s[1]]);
    if (len == 0) throw InvalidArgument("zero-length segment");
    values.push_back(std::log(len));
    errors.push_back(kErrorScale * kUnitRoundoff * m / len);
  }
  Classes out = classify_numeric(values, errors, labels, 0.0, "length");
  for (double& r : out.representative) r = std::exp(r);
  return out;
}

std::size_t count_slopes(const Drawing& d) { return classify_slopes(d).count; }
std::size_t count_lengths(const Drawing& d) { return classify_lengths(d).count; }

// ---- incidence ------------------------------------------------------------

namespace {

double bbox_diameter(const std::vector<DPoint>& pts) {
  if (pts.empty()) return 0;
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

double point_segment_distance(const DPoint& p, const DPoint& a, const DPoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double cross(const DPoint& a, const DPoint& b, const DPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double segment_distance(const DPoint& a, const DPoint& b, const DPoint& c, const DPoint& d) {
  const double o1 = cross(a, b, c);
  const double o2 = cross(a, b, d);
  const double o3 = cross(c, d, a);
  const double o4 = cross(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

// Backend-neutral incidence tests over a SegmentView.
struct NumericTests {
  const std::vector<DPoint>& pts;
  double pad;
  bool same(std::size_t a, std::size_t b) const {
    return std::hypot(pts[a].x - pts[b].x, pts[a].y - pts[b].y) <= pad;
  }
  bool on_segment(std::size_t p, std::size_t a, std::size_t b) const {
    return point_segment_distance(pts[p], pts[a], pts[b]) <= pad;
  }
  bool meet(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return segment_distance(pts[a], pts[b], pts[c], pts[d]) <= pad;
  }
  // Segments ab and ac overlap beyond their common endpoint a.
  bool overlap_at(std::size_t a, std::size_t b, std::size_t c) const {
    return point_segment_distance(pts[c], pts[a], pts[b]) <= pad ||
           point_segment_distance(pts[b], pts[a], pts[c]) <= pad;
  }
  bool collinear(std::size_t a, std::size_t b, std::size_t c) const {
    const double len = std::hypot(pts[b].x - pts[a].x, pts[b].y - pts[a].y);
    return len == 0 || std::abs(cross(pts[a], pts[b], pts[c])) / len <= pad;
  }
  int orient(std::size_t a, std::size_t b, std::size_t c) const {
    const double v = cross(pts[a], pts[b], pts[c]);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  bool less(std::size_t a, std::size_t b) const {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  }
};

struct ExactTests {
  ExactKernel k;
  bool same(std::size_t a, std::size_t b) const { return k.same_point(a, b); }
  bool on_segment(std::size_t p, std::size_t a, std::size_t b) const { return k.on_segment(p, a, b); }
  bool meet(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const { return k.segments_meet(a, b, c, d); }
  bool overlap_at(std::size_t a, std::size_t b, std::size_t c) const {
    return k.orient(a, b, c) == 0 && k.dot_sign(a, b, c) > 0;
  }
  bool collinear(std::size_t a, std::size_t b, std::size_t c) const { return k.orient(a, b, c) == 0; }
  int orient(std::size_t a, std::size_t b, std::size_t c) const { return k.orient(a, b, c); }
  bool less(std::size_t a, std::size_t b) const { return k.less(a, b); }
};

template <typename Fn>
auto with_tests(const Drawing& d, Fn&& fn) {
  if (const auto* ex = std::get_if<ExactLayout>(&d.layout)) {
    const auto view = detail::make_view(*ex, d.edges);
    ExactTests tests{ExactKernel(view.points)};
    return fn(view, tests);
  }
  const auto view = detail::make_view(d.numeric(), d.edges);
  NumericTests tests{view.points, kDistanceTolerance * bbox_diameter(view.points)};
  return fn(view, tests);
}

std::vector<graph::Edge> sorted_edges(std::vector<graph::Edge> edges) {
  for (auto& e : edges) e = graph::make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

ValidityReport validate_drawing(const graph::Graph& g, const Drawing& d) {
  ValidityReport report;
  auto fail = [&](std::string issue) {
    report.valid = false;
    report.issues.push_back(std::move(issue));
  };
  if (d.vertex_count() != g.vertex_count()) {
    fail("placement has " + std::to_string(d.vertex_count()) + " points for " +
         std::to_string(g.vertex_count()) + " vertices");
    return report;
  }
  if (sorted_edges(d.edges) != sorted_edges(g.edges())) fail("drawing edge set differs from the graph");
  for (const auto& e : d.edges) {
    if (e.u >= d.vertex_count() || e.v >= d.vertex_count() || e.u == e.v) {
      fail("drawing has an invalid edge");
      return report;
    }
  }
  with_tests(d, [&](const auto& view, const auto& tests) {
    const std::size_t np = view.points.size();
    for (std::size_t a = 0; a < np; ++a) {
      for (std::size_t b = a + 1; b < np; ++b) {
        if (tests.same(a, b)) {
          report.duplicate_points.emplace_back(a, b);
          fail("points " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
        }
      }
    }
    for (std::size_t e = 0; e < view.bend_point.size(); ++e) {
      const std::size_t x = view.bend_point[e];
      if (x == SIZE_MAX) continue;
      for (std::size_t v = 0; v < view.vertex_count; ++v) {
        if (tests.same(x, v)) {
          report.bend_on_vertex.push_back(e);
          fail("bend of edge " + std::to_string(e) + " coincides with vertex " + std::to_string(v));
        }
      }
    }
    for (std::size_t s = 0; s < view.segments.size(); ++s) {
      const auto [a, b] = view.segments[s];
      for (std::size_t p = 0; p < np; ++p) {
        if (p == a || p == b) continue;
        if (tests.on_segment(p, a, b)) {
          report.vertex_on_segment.emplace_back(s, p);
          fail("point " + std::to_string(p) + " lies on segment " + std::to_string(s));
        }
      }
    }
    return 0;
  });
  return report;
}

std::size_t count_crossings(const graph::Graph& g, const Drawing& d) {
  if (d.vertex_count() != g.vertex_count()) throw InvalidArgument("drawing does not match graph");
  return with_tests(d, [&](const auto& view, const auto& tests) {
    std::size_t crossings = 0;
    const auto& segs = view.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        const auto [a, b] = segs[i];
        const auto [c, e] = segs[j];
        bool hit = false;
        if (a == c) {
          hit = tests.overlap_at(a, b, e);
        } else if (a == e) {
          hit = tests.overlap_at(a, b, c);
        } else if (b == c) {
          hit = tests.overlap_at(b, a, e);
        } else if (b == e) {
          hit = tests.overlap_at(b, a, c);
        } else {
          hit = tests.meet(a, b, c, e);
        }
        crossings += hit;
      }
    }
    return crossings;
  });
}

bool is_convex_drawing(const graph::Graph& g, const Drawing& d) {
  if (d.vertex_count() != g.vertex_count()) throw InvalidArgument("drawing does not match graph");
  return with_tests(d, [&](const auto& view, const auto& tests) {
    const std::size_t n = view.vertex_count;
    if (n <= 2) return n < 2 || !tests.same(0, 1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          if (tests.collinear(a, b, c)) return false;
        }
      }
    }
    // Monotone chain; with no three collinear every hull turn is strict.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return tests.less(a, b); });
    std::vector<std::size_t> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t base = hull.size();
      for (std::size_t p : idx) {
        while (hull.size() >= base + 2 && tests.orient(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(idx.begin(), idx.end());
    }
    return hull.size() == n;
  });
}

}  // namespace slopeforge::geometry
