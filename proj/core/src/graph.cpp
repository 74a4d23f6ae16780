#include "slopeforge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "slopeforge/errors.hpp"

namespace slopeforge::graph {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= n || raw.v >= n) {
      throw InvalidArgument("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                            "} out of range for n=" + std::to_string(n));
    }
    if (raw.u == raw.v) throw InvalidArgument("self-loop at vertex " + std::to_string(raw.u));
    edges_.push_back(make_edge(raw.u, raw.v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("duplicate edge");
    }
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key = make_edge(a, b);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == key) return i;
  }
  return std::nullopt;
}

Graph Graph::canonical() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return Graph(vertex_count(), sorted);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adjacency_ == b.adjacency_;
}

bool adjacency_consistent(const Graph& g) {
  std::vector<std::vector<Vertex>> rebuilt(g.vertex_count());
  for (const Edge& e : g.edges()) {
    rebuilt[e.u].push_back(e.v);
    rebuilt[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::sort(rebuilt[v].begin(), rebuilt[v].end());
    auto nb = g.neighbors(v);
    if (!std::equal(rebuilt[v].begin(), rebuilt[v].end(), nb.begin(), nb.end())) return false;
    if (g.degree(v) != nb.size()) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> queue;
    queue.push(s);
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back(make_edge(static_cast<Vertex>(local[e.u]), static_cast<Vertex>(local[e.v])));
    }
  }
  return Graph(vertices.size(), edges);
}

Graph subdivide(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const Vertex x = n + static_cast<Vertex>(i);
    edges.push_back(make_edge(e.u, x));
    edges.push_back(make_edge(x, e.v));
  }
  return Graph(g.vertex_count() + g.edge_count(), edges);
}

std::optional<std::vector<std::vector<Vertex>>> complete_multipartite_parts(const Graph& g) {
  // Parts are the components of the complement; each must be independent and
  // fully joined to every other part.
  const std::size_t n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::vector<int> part(n, -1);
  int parts = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (part[s] >= 0) continue;
    for (Vertex v = s; v < n; ++v) {
      if (part[v] < 0 && (v == s || !g.has_edge(s, v))) part[v] = parts;
    }
    ++parts;
  }
  if (parts < 2) return std::nullopt;
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(parts));
  for (Vertex v = 0; v < n; ++v) out[static_cast<std::size_t>(part[v])].push_back(v);
  std::size_t expected = 0;
  for (const auto& p : out) expected += p.size() * (n - p.size());
  if (expected / 2 != g.edge_count()) return std::nullopt;
  for (const Edge& e : g.edges()) {
    if (part[e.u] == part[e.v]) return std::nullopt;
  }
  return out;
}

// ---- text format ----------------------------------------------------------

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> seen;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected two integers", line_no);
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_uint(tokens[0], a) || !parse_uint(tokens[1], b)) {
      throw ParseError("expected non-negative integers", line_no);
    }
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > (1u << 30)) throw ParseError("vertex count too large", line_no);
      seen.resize(n);
    } else {
      if (edges.size() == m) throw ParseError("more edges than declared in header", line_no);
      if (a >= n || b >= n) throw ParseError("vertex id out of range", line_no);
      if (a == b) throw ParseError("self-loop", line_no);
      Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      auto& list = seen[e.u];
      if (std::find(list.begin(), list.end(), e.v) != list.end()) {
        throw ParseError("duplicate edge", line_no);
      }
      list.push_back(e.v);
      edges.push_back(e);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header \"n m\"");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream out;
  out << g.vertex_count() << ' ' << sorted.size() << '\n';
  for (const Edge& e : sorted) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace slopeforge::graph
