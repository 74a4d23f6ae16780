#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "slopeforge/bounds.hpp"
#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/ordering.hpp"
#include "slopeforge/tree.hpp"

using namespace slopeforge;
using namespace slopeforge::constructions;
using geometry::Drawing;
using graph::Graph;
using graph::Vertex;

namespace {

void expect_certified(const Construction& c) {
  const auto chk = check_certificate(c);
  EXPECT_TRUE(chk.ok) << theorem_name(c.certificate.theorem) << ": "
                      << (chk.violations.empty() ? "" : chk.violations.front());
}

// Exact drawings: measured values from the rational oracle.
std::size_t oracle_slopes(const Construction& c) {
  return oracle::slope_count(oracle::to_rational(c.drawing));
}

}  // namespace

TEST(CompleteNgonTest, SlopesLengthsConvex) {
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto c = draw_complete_ngon(n);
    EXPECT_EQ(geometry::count_slopes(c.drawing), n);
    EXPECT_EQ(geometry::count_lengths(c.drawing), n / 2);
    EXPECT_TRUE(geometry::is_convex_drawing(c.graph, c.drawing));
    expect_certified(c);
  }
  EXPECT_THROW(draw_complete_ngon(2), InvalidArgument);
}

TEST(KnnTest, SlopesMatchResidueOracle) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto c = draw_knn(n);
    EXPECT_EQ(geometry::count_slopes(c.drawing), n);
    if (n > 1) {
      std::vector<std::size_t> idx(2 * n);
      for (std::size_t v = 0; v < 2 * n; ++v) idx[v] = v < n ? 2 * v : 2 * (v - n) + 1;
      EXPECT_EQ(oracle::ngon_residues(c.graph, idx, 2 * n), n);
    }
    expect_certified(c);
  }
}

TEST(KabTest, FigureCase) {
  const auto c = draw_kab_rows(3, 12);
  EXPECT_EQ(c.drawing.mode(), geometry::CoordMode::exact);
  EXPECT_EQ(oracle_slopes(c), 8u);
  EXPECT_FALSE(oracle::has_incidence_violation(oracle::to_rational(c.drawing)));
}

TEST(KabTest, SandwichWithOracle) {
  for (std::size_t a = 1; a <= 8; ++a) {
    for (std::size_t b = a; b <= 8; ++b) {
      const auto c = draw_kab_rows(a, b);
      const auto [lo, hi] = kab_slope_bounds(a, b);
      EXPECT_EQ(lo, (a + b) / 2);
      EXPECT_EQ(hi, std::min(b, (b + 1) / 2 + a - 1));
      const std::size_t s = c.drawing.mode() == geometry::CoordMode::exact ? oracle_slopes(c)
                                                                            : geometry::count_slopes(c.drawing);
      EXPECT_GE(s, lo) << a << "," << b;
      EXPECT_LE(s, hi) << a << "," << b;
      auto parts = graph::complete_multipartite_parts(c.graph);
      ASSERT_TRUE(parts);
      EXPECT_EQ((*parts)[0].size() + (*parts)[1].size(), a + b);
      expect_certified(c);
    }
  }
}

TEST(Power2Test, PartitionSizes) {
  for (std::size_t p : {0u, 1u, 2u}) {
    for (std::size_t k : {2u, 3u, 5u, 9u}) {
      const auto part = power2_partition(p, k);
      EXPECT_EQ(part.n, (k - 1) << (p + 1));
      EXPECT_EQ(part.parts.front().size(), std::size_t{1} << p);
      EXPECT_EQ(part.parts.back().size(), std::size_t{1} << p);
      for (std::size_t i = 1; i + 1 < k; ++i) EXPECT_EQ(part.parts[i].size(), std::size_t{2} << p);
    }
  }
  EXPECT_THROW(power2_partition(0, 4), InvalidArgument);
  EXPECT_THROW(power2_partition(0, 1), InvalidArgument);
}

TEST(Power2Test, SlopesEqualMaxDegree) {
  for (std::size_t p : {0u, 1u, 2u}) {
    for (std::size_t k : {2u, 3u, 5u}) {
      const auto c = draw_multipartite_power2(p, k);
      const std::size_t n = c.graph.vertex_count();
      const std::size_t expected = n - (std::size_t{1} << p);
      EXPECT_EQ(c.graph.max_degree(), expected);
      std::vector<std::size_t> idx(n);
      for (std::size_t v = 0; v < n; ++v) idx[v] = v;
      if (n > 2) EXPECT_EQ(oracle::ngon_residues(c.graph, idx, n), expected);
      EXPECT_EQ(geometry::count_slopes(c.drawing), expected);
      expect_certified(c);
    }
  }
}

TEST(HPartitionTest, Validation) {
  const Graph c6 = graph::make_cycle(6);
  const Graph host = graph::make_cycle(3);
  EXPECT_NO_THROW(HPartition(c6, host, {0, 0, 1, 1, 2, 2}));
  EXPECT_THROW(HPartition(c6, graph::make_path(3), {0, 0, 1, 1, 2, 2}), InvalidArgument);
  EXPECT_THROW(HPartition(c6, host, {0, 0, 1, 1, 2}), InvalidArgument);
  EXPECT_THROW(HPartition(c6, host, {0, 0, 1, 1, 2, 2}, {0, 0, 0, 1, 0, 1}), InvalidArgument);
  const HPartition p(c6, host, {0, 0, 1, 1, 2, 2});
  EXPECT_EQ(p.width(), 2u);
  EXPECT_EQ(p.preimage(1), (std::vector<Vertex>{2, 3}));
}

TEST(BlowUpTest, HostParallelEdgesStayParallel) {
  const Graph host = graph::make_complete(4);
  const Graph g = graph::make_complete(12);
  std::vector<Vertex> assign(12);
  for (Vertex v = 0; v < 12; ++v) assign[v] = v / 3;
  const HPartition part(g, host, assign);
  const Drawing hd = geometry::realize_ngon(host, geometry::identity_assignment(4));
  const auto c = blow_up(g, hd, part);
  expect_certified(c);
  const auto slopes = geometry::classify_slopes(c.drawing);
  // Host edges of one slope class carry the same set of slopes.
  const auto host_slopes = geometry::classify_slopes(hd);
  std::vector<std::set<int>> per_host_edge(host.edge_count());
  for (std::size_t i = 0; i < c.graph.edge_count(); ++i) {
    const auto e = c.graph.edges()[i];
    if (assign[e.u] == assign[e.v]) continue;
    per_host_edge[*host.edge_index(assign[e.u], assign[e.v])].insert(slopes.of_segment[i]);
  }
  for (std::size_t x = 0; x < host.edge_count(); ++x) {
    for (std::size_t y = x + 1; y < host.edge_count(); ++y) {
      if (host_slopes.of_segment[x] == host_slopes.of_segment[y]) EXPECT_EQ(per_host_edge[x], per_host_edge[y]);
    }
  }
  const auto stats = host_drawing_stats(hd);
  EXPECT_EQ(stats.s, 4u);
  EXPECT_EQ(stats.l, 2u);
  EXPECT_EQ(stats.t, 4u);
  EXPECT_LE(geometry::count_slopes(c.drawing), 4 + stats.s + stats.t * 12);
}

TEST(BlowUpTest, RejectsBentHost) {
  const auto bent = draw_one_bend(graph::make_complete(3));
  const Graph g = graph::make_complete(3);
  const HPartition part(g, g, {0, 1, 2});
  EXPECT_THROW(blow_up(g, bent.drawing, part), InvalidArgument);
}

TEST(BandwidthDrawingTest, SmallFamilies) {
  const std::vector<Graph> graphs{graph::make_path(8), graph::make_cycle(9), graph::make_grid(3, 4),
                                  graph::make_complete(4), graph::make_star(5)};
  for (const Graph& g : graphs) {
    const auto o = graph::bandwidth_exact(g);
    const auto c = draw_bandwidth(g, o);
    const std::size_t b = o.width();
    EXPECT_LE(geometry::count_slopes(c.drawing), b * (b + 1) / 2 + 1);
    EXPECT_TRUE(geometry::validate_drawing(c.graph, c.drawing).valid);
    expect_certified(c);
  }
}

TEST(TreeDrawingTest, PathsAreExactAndHorizontal) {
  const auto c = draw_tree(graph::make_path(10));
  EXPECT_EQ(c.drawing.mode(), geometry::CoordMode::exact);
  EXPECT_EQ(oracle_slopes(c), 1u);
  EXPECT_EQ(oracle::length_count(oracle::to_rational(c.drawing)), 1u);
}

TEST(TreeDrawingTest, RandomTreesPlaneAndBounded) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph t = graph::make_random_tree(10 + seed % 20, 2 + seed % 6, seed);
    const auto c = draw_tree(t);
    const std::size_t delta = t.max_degree();
    EXPECT_LE(geometry::count_slopes(c.drawing), std::max<std::size_t>(delta - 1, 1));
    EXPECT_LE(geometry::count_lengths(c.drawing), 2 * graph::tree_pathwidth(t) - 1);
    const auto r = oracle::to_rational(c.drawing);
    EXPECT_EQ(oracle::crossing_count(r), 0u) << graph::serialize_graph(t);
    EXPECT_FALSE(oracle::has_incidence_violation(r));
    expect_certified(c);
  }
}

TEST(TreeDrawingTest, Forest) {
  std::vector<graph::Edge> e = graph::make_spider(3, 2).edges();
  const Graph tail = graph::make_path(4);
  for (const auto& x : tail.edges()) e.push_back({x.u + 7, x.v + 7});
  const Graph f(12, e);
  const auto c = draw_tree(f);
  EXPECT_EQ(geometry::count_crossings(c.graph, c.drawing), 0u);
  expect_certified(c);
  EXPECT_THROW(draw_tree(graph::make_cycle(4)), InvalidArgument);
}

TEST(TreePartitionTest, GridOverPathHost) {
  const Graph g = graph::make_grid(3, 4);
  std::vector<Vertex> assign(12);
  for (Vertex v = 0; v < 12; ++v) assign[v] = v % 4;
  const HPartition part(g, graph::make_path(4), assign);
  const auto c = draw_tree_partitioned(g, part);
  EXPECT_TRUE(geometry::validate_drawing(c.graph, c.drawing).valid);
  expect_certified(c);
}

TEST(OneBendTest, DirectionsAndUsedLines) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = graph::make_random_graph(16, 0.3, 6, seed);
    const auto c = draw_one_bend(g);
    ASSERT_EQ(c.drawing.mode(), geometry::CoordMode::exact);
    const auto r = oracle::to_rational(c.drawing);
    const std::size_t delta = g.max_degree();
    EXPECT_LE(oracle::slope_count(r), delta + 1);
    EXPECT_FALSE(oracle::has_incidence_violation(r));
    // every segment has direction (1, i) with integer 0 <= i <= delta
    std::vector<std::set<mpq_class>> used(g.vertex_count());
    for (const auto& [a, b] : r.segments) {
      const mpq_class dx = r.points[b].x - r.points[a].x;
      ASSERT_NE(dx, 0);
      const mpq_class s = (r.points[b].y - r.points[a].y) / dx;
      EXPECT_EQ(s.get_den(), 1);
      EXPECT_GE(s, 0);
      EXPECT_LE(s, static_cast<long>(delta));
      if (a < g.vertex_count()) used[a].insert(s);
      if (b < g.vertex_count()) used[b].insert(s);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(used[v].size(), g.degree(v));
    expect_certified(c);
  }
}

TEST(OneBendTest, PetersenAndK7) {
  for (const Graph& g : {graph::make_petersen(), graph::make_complete(7)}) {
    const auto c = draw_one_bend(g);
    EXPECT_LE(oracle_slopes(c), g.max_degree() + 1);
    expect_certified(c);
  }
}

TEST(CertificateTest, DetectsViolation) {
  auto c = draw_complete_ngon(6);
  c.certificate.claimed_slope_bound = 5;
  const auto chk = check_certificate(c);
  EXPECT_FALSE(chk.ok);
  EXPECT_FALSE(chk.violations.empty());
  auto t = draw_tree(graph::make_star(4));
  t.certificate.claimed_convex = true;
  EXPECT_FALSE(check_certificate(t).ok);
}

TEST(RelabelTest, IsomorphicCopy) {
  const auto c = draw_kab_rows(2, 3);
  // swap the sides: vertex v of g maps to construction vertex perm[v]
  const std::vector<Vertex> perm{2, 3, 4, 0, 1};
  std::vector<graph::Edge> e;
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 5; ++b) e.push_back({a, b});
  }
  const Graph g(5, e);
  const auto r = relabel(c, g, perm);
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(geometry::count_slopes(r.drawing), geometry::count_slopes(c.drawing));
  expect_certified(r);
  const std::vector<Vertex> bad{0, 1, 2, 3, 4};
  EXPECT_THROW(relabel(c, g, bad), InvalidArgument);
}
