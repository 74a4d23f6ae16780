#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "slopeforge/errors.hpp"
#include "slopeforge/graph.hpp"

using namespace slopeforge;
using namespace slopeforge::graph;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  return d;
}

}  // namespace

TEST(GraphTest, RejectsSelfLoopsAndDuplicates) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(3, loop), InvalidArgument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(3, dup), InvalidArgument);
  const std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(Graph(3, out_of_range), InvalidArgument);
}

TEST(GraphTest, AdjacencyMatchesEdges) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = make_random_graph(25, 0.2, 6, seed);
    EXPECT_TRUE(adjacency_consistent(g));
    std::size_t sum = 0;
    for (auto d : degrees(g)) sum += d;
    EXPECT_EQ(sum, 2 * g.edge_count());
    EXPECT_LE(g.max_degree(), 6u);
  }
}

TEST(GraphTest, EdgeIndexAndHasEdge) {
  const Graph g = make_cycle(5);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edges()[i];
    EXPECT_TRUE(g.has_edge(e.v, e.u));
    EXPECT_EQ(g.edge_index(e.v, e.u), i);
  }
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_FALSE(g.edge_index(0, 2).has_value());
}

// Closed forms for edge and degree counts.
TEST(GeneratorTest, CompleteAndMultipartite) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Graph g = make_complete(n);
    EXPECT_EQ(g.edge_count(), n * (n - 1) / 2);
    EXPECT_EQ(g.min_degree(), n - 1);
  }
  const std::vector<std::size_t> sizes{2, 3, 4};
  const Graph g = make_complete_multipartite(sizes);
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 2u * 3 + 2 * 4 + 3 * 4);
  EXPECT_EQ(g.max_degree(), 7u);
  EXPECT_EQ(g.min_degree(), 5u);
  auto parts = complete_multipartite_parts(g);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->size(), 3u);
  EXPECT_FALSE(complete_multipartite_parts(make_cycle(5)));
  EXPECT_TRUE(complete_multipartite_parts(make_cycle(4)));
}

TEST(GeneratorTest, PathsCyclesStarsGrids) {
  EXPECT_EQ(make_path(7).edge_count(), 6u);
  EXPECT_EQ(make_cycle(7).edge_count(), 7u);
  EXPECT_EQ(make_cycle(7).max_degree(), 2u);
  const Graph s = make_star(6);
  EXPECT_EQ(s.vertex_count(), 7u);
  EXPECT_EQ(s.max_degree(), 6u);
  const Graph grid = make_grid(3, 5);
  EXPECT_EQ(grid.edge_count(), 3u * 4 + 2 * 5);
  EXPECT_EQ(grid.max_degree(), 4u);
  EXPECT_THROW(make_cycle(2), InvalidArgument);
}

TEST(GeneratorTest, PetersenIsCubic) {
  const Graph p = make_petersen();
  EXPECT_EQ(p.vertex_count(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  EXPECT_EQ(p.min_degree(), 3u);
  EXPECT_EQ(p.max_degree(), 3u);
  // girth 5: no triangles or 4-cycles
  for (Vertex a = 0; a < 10; ++a) {
    for (Vertex b = a + 1; b < 10; ++b) {
      std::size_t common = 0;
      for (Vertex c : p.neighbors(a)) common += p.has_edge(b, c);
      EXPECT_EQ(common, p.has_edge(a, b) ? 0u : 1u);
    }
  }
}

TEST(GeneratorTest, Trees) {
  EXPECT_TRUE(is_tree(make_complete_binary_tree(5)));
  EXPECT_EQ(make_complete_binary_tree(5).vertex_count(), 31u);
  const Graph sp = make_spider(4, 3);
  EXPECT_TRUE(is_tree(sp));
  EXPECT_EQ(sp.vertex_count(), 13u);
  EXPECT_EQ(sp.max_degree(), 4u);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph t = make_random_tree(40, 4, seed);
    EXPECT_TRUE(is_tree(t));
    EXPECT_LE(t.max_degree(), 4u);
  }
  EXPECT_EQ(make_random_tree(30, 5, 7), make_random_tree(30, 5, 7));
}

TEST(GraphTest, ComponentsAndForests) {
  const std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}};
  const Graph g(6, e);
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{5}));
  EXPECT_TRUE(is_forest(g));
  EXPECT_FALSE(is_tree(g));
  EXPECT_FALSE(is_forest(make_cycle(4)));
}

TEST(GraphTest, SubdivisionAndInducedSubgraph) {
  const Graph k4 = make_complete(4);
  const Graph s = subdivide(k4);
  EXPECT_EQ(s.vertex_count(), 10u);
  EXPECT_EQ(s.edge_count(), 12u);
  for (std::size_t i = 0; i < k4.edge_count(); ++i) {
    const Vertex x = static_cast<Vertex>(4 + i);
    EXPECT_TRUE(s.has_edge(k4.edges()[i].u, x));
    EXPECT_TRUE(s.has_edge(k4.edges()[i].v, x));
  }
  const std::vector<Vertex> keep{3, 1, 2};
  const Graph h = induced_subgraph(make_path(5), keep);
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_TRUE(h.has_edge(1, 2));
  EXPECT_TRUE(h.has_edge(0, 2));
}

TEST(GraphIoTest, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = make_random_graph(15, 0.3, 8, seed);
    const Graph back = parse_graph(serialize_graph(g));
    EXPECT_EQ(back, g.canonical());
    EXPECT_EQ(serialize_graph(back), serialize_graph(g));
  }
}

TEST(GraphIoTest, CommentsAndBlankLines) {
  const Graph g = parse_graph("# triangle\n\n3 3\n0 1\n# mid\n1 2\n2 0\n");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphIoTest, Errors) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 x\n"), ParseError);
  try {
    parse_graph("3 2\n0 1\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
