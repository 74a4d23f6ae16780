#include <algorithm>
#include <random>

#include "detail/random.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/graph.hpp"

namespace slopeforge::graph {

Graph make_complete(std::size_t n) {
  if (n == 0) throw InvalidArgument("make_complete: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph make_complete_multipartite(std::span<const std::size_t> part_sizes) {
  if (part_sizes.size() < 2) throw InvalidArgument("complete multipartite graph needs at least 2 parts");
  std::vector<std::size_t> start;
  std::size_t n = 0;
  for (std::size_t s : part_sizes) {
    if (s == 0) throw InvalidArgument("part sizes must be positive");
    start.push_back(n);
    n += s;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < part_sizes.size(); ++a) {
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b) {
      for (std::size_t i = 0; i < part_sizes[a]; ++i) {
        for (std::size_t j = 0; j < part_sizes[b]; ++j) {
          edges.push_back(make_edge(static_cast<Vertex>(start[a] + i), static_cast<Vertex>(start[b] + j)));
        }
      }
    }
  }
  return Graph(n, edges);
}

Graph make_path(std::size_t n) {
  if (n == 0) throw InvalidArgument("make_path: n must be positive");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("make_cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % n)));
  return Graph(n, edges);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

Graph make_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("make_grid: dimensions must be positive");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph(rows * cols, edges);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, edges);
}

Graph make_complete_binary_tree(std::size_t levels) {
  if (levels == 0) throw InvalidArgument("make_complete_binary_tree: levels must be positive");
  const std::size_t n = (std::size_t{1} << levels) - 1;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back(make_edge((v - 1) / 2, v));
  return Graph(n, edges);
}

Graph make_spider(std::size_t legs, std::size_t leg_length) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i) {
      edges.push_back(make_edge(prev, next));
      prev = next++;
    }
  }
  return Graph(next, edges);
}

Graph make_random_tree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("make_random_tree: n must be positive");
  if (n > 2 && max_degree < 2) throw InvalidArgument("make_random_tree: max_degree must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  std::vector<Vertex> open{0};
  for (Vertex v = 1; v < n; ++v) {
    const auto pick = detail::uniform_below(rng, open.size());
    const Vertex parent = open[pick];
    edges.push_back(make_edge(parent, v));
    if (++degree[parent] >= max_degree) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (++degree[v] < max_degree) open.push_back(v);
  }
  return Graph(n, edges);
}

Graph make_random_graph(std::size_t n, double p, std::size_t max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (detail::uniform_unit(rng) < p && degree[i] < max_degree && degree[j] < max_degree) {
        edges.push_back({i, j});
        ++degree[i];
        ++degree[j];
      }
    }
  }
  return Graph(n, edges);
}

}  // namespace slopeforge::graph
