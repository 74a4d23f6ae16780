#include <algorithm>
#include <cstdint>
#include <vector>

#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"

namespace slopeforge::constructions {

namespace {

struct IPoint {
  std::int64_t x;
  std::int64_t y;
};

// Smallest y >= 0 such that (x, y) lies on no slope line of an earlier vertex
// and on no line of slope c through a crossing of slope lines of two earlier
// vertices. Slope c means direction (1, c).
std::int64_t free_height(const std::vector<IPoint>& placed, std::int64_t x, std::int64_t slopes) {
  // The answer is at most the number of forbidden values, so only values in
  // [0, bound] need marking.
  const auto p = static_cast<std::int64_t>(placed.size());
  const std::int64_t bound =
      std::min<std::int64_t>(p * slopes + p * (p - 1) / 2 * slopes * slopes * slopes, std::int64_t{1} << 24);
  std::vector<char> taken(static_cast<std::size_t>(bound) + 1, 0);
  auto forbid = [&](std::int64_t y) {
    if (y >= 0 && y <= bound) taken[static_cast<std::size_t>(y)] = 1;
  };
  for (const auto& u : placed) {
    for (std::int64_t c = 0; c < slopes; ++c) forbid(u.y + c * (x - u.x));
  }
  for (std::size_t i = 0; i < placed.size(); ++i) {
    const auto& u = placed[i];
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      const auto& w = placed[j];
      for (std::int64_t a = 0; a < slopes; ++a) {
        for (std::int64_t b = 0; b < slopes; ++b) {
          if (a == b) continue;
          // Crossing of u's line of slope a and w's line of slope b at num/(a-b).
          const std::int64_t num = w.y - u.y + a * u.x - b * w.x;
          for (std::int64_t c = 0; c < slopes; ++c) {
            if (c == a || c == b) continue;
            const std::int64_t t = (a - c) * num;
            if (t % (a - b) != 0) continue;
            forbid(u.y - a * u.x + c * x + t / (a - b));
          }
        }
      }
    }
  }
  const auto it = std::find(taken.begin(), taken.end(), 0);
  if (it == taken.end()) throw ConstructionError("one-bend placement: no free height below the search cap");
  return static_cast<std::int64_t>(it - taken.begin());
}

geometry::QPoint crossing(const IPoint& v, std::int64_t a, const IPoint& w, std::int64_t b) {
  geometry::Rational x(w.y - v.y + a * v.x - b * w.x, a - b);
  x.canonicalize();
  geometry::Rational y = v.y + a * (x - v.x);
  return {x, y};
}

}  // namespace

Construction draw_one_bend(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t delta = g.max_degree();
  const auto slopes = static_cast<std::int64_t>(delta + 1);
  const auto spacing = static_cast<std::int64_t>(n * (delta + 2));

  std::vector<IPoint> placed;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t x = static_cast<std::int64_t>(j) * spacing;
    placed.push_back({x, free_height(placed, x, slopes)});
  }

  std::vector<std::vector<char>> used(n, std::vector<char>(static_cast<std::size_t>(slopes), 0));
  std::vector<std::size_t> order(g.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.edges()[a] < g.edges()[b]; });

  geometry::ExactLayout layout;
  for (const auto& p : placed) layout.vertices.push_back({p.x, p.y});
  for (std::size_t idx : order) {
    const auto& e = g.edges()[idx];
    const IPoint& v = placed[e.u];
    const IPoint& w = placed[e.v];
    std::vector<std::int64_t> free_v;
    std::vector<std::int64_t> free_w;
    for (std::int64_t c = 0; c < slopes; ++c) {
      if (!used[e.u][c]) free_v.push_back(c);
      if (!used[e.v][c]) free_w.push_back(c);
    }
    if (free_v.size() < 2 || free_w.size() < 2) {
      throw ConstructionError("one-bend routing: fewer than two unused slope lines at an endpoint");
    }
    const geometry::Rational mx = geometry::Rational(v.x + w.x, 2);
    const geometry::Rational my = geometry::Rational(v.y + w.y, 2);
    std::optional<geometry::QPoint> best;
    geometry::Rational best_dist;
    std::int64_t best_a = 0;
    std::int64_t best_b = 0;
    for (std::int64_t a : free_v) {
      for (std::int64_t b : free_w) {
        if (a == b) continue;
        auto q = crossing(v, a, w, b);
        geometry::Rational dx = q.x - mx;
        geometry::Rational dy = q.y - my;
        geometry::Rational dist = dx * dx + dy * dy;
        if (!best || dist < best_dist) {
          best = std::move(q);
          best_dist = dist;
          best_a = a;
          best_b = b;
        }
      }
    }
    used[e.u][best_a] = 1;
    used[e.v][best_b] = 1;
    layout.bends[idx] = std::move(*best);
  }

  Drawing d;
  d.layout = std::move(layout);
  d.edges = g.edges();
  Certificate cert;
  cert.claimed_slope_bound = delta + 1;
  cert.theorem = Theorem::one_bend;
  return {g, std::move(d), cert};
}

}  // namespace slopeforge::constructions
