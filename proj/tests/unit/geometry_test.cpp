#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/geometry.hpp"
#include "slopeforge/graph.hpp"

using namespace slopeforge;
using namespace slopeforge::geometry;
using graph::Edge;
using graph::Graph;

namespace {

QPoint q(long x, long y) { return {Rational(x), Rational(y)}; }

std::vector<QPoint> random_points(std::size_t n, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  std::vector<QPoint> pts;
  while (pts.size() < n) {
    QPoint p = q(coord(rng), coord(rng));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST(SlopeTest, ExactNormalization) {
  EXPECT_EQ(slope_of(q(0, 0), q(2, 4)), slope_of(q(5, 5), q(4, 3)));
  EXPECT_EQ(slope_of(q(0, 0), q(3, 0)), slope_of(q(1, 1), q(-2, 1)));
  EXPECT_EQ(slope_of(q(0, 0), q(0, 3)), slope_of(q(1, 1), q(1, -2)));
  EXPECT_FALSE(slope_of(q(0, 0), q(1, 1)) == slope_of(q(0, 0), q(1, -1)));
  const QPoint a{Rational(1, 3), Rational(0)};
  const QPoint b{Rational(0), Rational(1, 2)};
  EXPECT_EQ(slope_of(a, b), slope_of(q(0, 0), q(-2, 3)));
}

TEST(SlopeTest, AnglesInHalfOpenInterval) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const DPoint p{u(rng), u(rng)};
    const DPoint r{u(rng), u(rng)};
    const double a = slope_of(p, r).angle;
    EXPECT_GE(a, 0.0);
    EXPECT_LT(a, std::numbers::pi);
    EXPECT_NEAR(a, slope_of(r, p).angle, 1e-12);
  }
  EXPECT_NEAR(angle_gap(0.001, std::numbers::pi - 0.001), 0.002, 1e-12);
}

TEST(SlopeTest, ExactAndNumericAgreeWithOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = graph::make_random_graph(9, 0.4, 8, trial + 1);
    const auto pts = random_points(9, rng, 6);
    const Drawing d = make_drawing(g, pts);
    const auto r = oracle::to_rational(d);
    EXPECT_EQ(count_slopes(d), oracle::slope_count(r));
    EXPECT_EQ(count_lengths(d), oracle::length_count(r));
  }
}

TEST(SlopeTest, NumericNearParallelAmbiguityThrows) {
  const Graph g(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const Drawing ok = make_drawing(g, std::vector<DPoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1 + 1e-12}});
  EXPECT_EQ(count_slopes(ok), 1u);
  const Drawing far = make_drawing(g, std::vector<DPoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1.001}});
  EXPECT_EQ(count_slopes(far), 2u);
  const Drawing amb = make_drawing(g, std::vector<DPoint>{{0, 0}, {1, 0}, {0, 1}, {1, 1 + 3e-9}});
  EXPECT_THROW(count_slopes(amb), PrecisionError);
}

TEST(ValidityTest, DetectsDefects) {
  const Graph path = graph::make_path(3);
  EXPECT_TRUE(validate_drawing(path, make_drawing(path, {q(0, 0), q(1, 1), q(2, 0)})).valid);
  const auto dup = validate_drawing(path, make_drawing(path, {q(0, 0), q(1, 1), q(0, 0)}));
  EXPECT_FALSE(dup.valid);
  EXPECT_EQ(dup.duplicate_points.size(), 1u);
  // vertex 1 in the interior of edge 0-2 (not an edge here, so use a triangle-free pair)
  const Graph g(3, std::vector<Edge>{{0, 2}});
  const auto on = validate_drawing(g, make_drawing(g, {q(0, 0), q(1, 0), q(2, 0)}));
  EXPECT_FALSE(on.valid);
  EXPECT_EQ(on.vertex_on_segment.size(), 1u);
  EXPECT_FALSE(validate_drawing(graph::make_path(4), make_drawing(path, {q(0, 0), q(1, 1), q(2, 0)})).valid);
}

TEST(ValidityTest, RandomAgreesWithOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = graph::make_random_graph(7, 0.4, 6, trial + 7);
    const Drawing d = make_drawing(g, random_points(7, rng, 2));
    EXPECT_EQ(validate_drawing(g, d).valid, !oracle::has_incidence_violation(oracle::to_rational(d)));
  }
}

TEST(CrossingTest, RandomAgreesWithOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = graph::make_random_graph(8, 0.35, 6, trial + 101);
    const Drawing d = make_drawing(g, random_points(8, rng, 3));
    EXPECT_EQ(count_crossings(g, d), oracle::crossing_count(oracle::to_rational(d)));
  }
}

TEST(CrossingTest, NumericMatchesExactOnIntegerPoints) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = graph::make_random_graph(8, 0.35, 6, trial + 501);
    const auto pts = random_points(8, rng, 20);
    std::vector<DPoint> dp;
    for (const auto& p : pts) dp.push_back({p.x.get_d(), p.y.get_d()});
    EXPECT_EQ(count_crossings(g, make_drawing(g, dp)), count_crossings(g, make_drawing(g, pts)));
  }
}

TEST(CrossingTest, K4SquareHasOneCrossing) {
  const Graph k4 = graph::make_complete(4);
  EXPECT_EQ(count_crossings(k4, make_drawing(k4, {q(0, 0), q(1, 0), q(1, 1), q(0, 1)})), 1u);
  EXPECT_EQ(count_crossings(k4, make_drawing(k4, {q(0, 0), q(4, 0), q(0, 4), q(1, 1)})), 0u);
}

TEST(ConvexTest, PolygonAndInteriorPoint) {
  const Graph c = graph::make_cycle(4);
  EXPECT_TRUE(is_convex_drawing(c, make_drawing(c, {q(0, 0), q(1, 0), q(1, 1), q(0, 1)})));
  EXPECT_FALSE(is_convex_drawing(c, make_drawing(c, {q(0, 0), q(4, 0), q(1, 1), q(0, 4)})));
  // three collinear hull points
  EXPECT_FALSE(is_convex_drawing(c, make_drawing(c, {q(0, 0), q(1, 0), q(2, 0), q(1, 1)})));
}

// ngon_slope_count is the modular identity; compare with counting slopes of
// the realized polygon drawing and with the residue oracle.
TEST(PolygonTest, ModularIdentityMatchesNumericCount) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 14;
    const Graph g = graph::make_random_graph(n, 0.5, n, trial + 900);
    if (g.edge_count() == 0) continue;
    PolygonAssignment a = identity_assignment(n);
    std::shuffle(a.index.begin(), a.index.end(), rng);
    const std::size_t identity = ngon_slope_count(g, a);
    EXPECT_EQ(identity, oracle::ngon_residues(g, a.index, n));
    EXPECT_EQ(count_slopes(realize_ngon(g, a)), identity);
  }
}

TEST(PolygonTest, CornersOnUnitCircle) {
  for (std::size_t i = 0; i < 7; ++i) {
    const DPoint p = polygon_corner(7, i);
    EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, 1e-15);
  }
}

TEST(DrawingTest, DrawnGraphOfBentDrawingIsSubdivision) {
  const Graph k3 = graph::make_complete(3);
  Drawing d = make_drawing(k3, {q(0, 0), q(2, 0), q(0, 2)});
  auto& layout = std::get<ExactLayout>(d.layout);
  layout.bends[0] = q(1, -1);
  EXPECT_TRUE(d.has_bends());
  const Graph dg = drawn_graph(d);
  EXPECT_EQ(dg.vertex_count(), 4u);
  EXPECT_EQ(dg.edge_count(), 4u);
  EXPECT_TRUE(validate_drawing(k3, d).valid);
  // slopes -1, 1 and vertical
  EXPECT_EQ(count_slopes(d), 3u);
  layout.bends[0] = q(2, 0);
  EXPECT_FALSE(validate_drawing(k3, d).valid);
}
