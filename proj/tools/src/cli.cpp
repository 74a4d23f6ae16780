#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "families.hpp"
#include "json.hpp"
#include "slopeforge/bounds.hpp"
#include "slopeforge/constructions.hpp"
#include "slopeforge/errors.hpp"
#include "slopeforge/io.hpp"
#include "slopeforge/ordering.hpp"

namespace slopeforge::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using constructions::Construction;
using graph::Graph;
using graph::Vertex;

const std::vector<std::string> kMethods{"ngon",      "knn",  "kab-rows",       "multipartite-pow2", "blowup",
                                        "bandwidth", "tree", "tree-partition", "one-bend"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SLOPEFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidArgument("SLOPEFORGE_SEED must be an unsigned integer");
    }
  }
  return 1;
}

// ---- graph helpers --------------------------------------------------------

std::vector<std::vector<Vertex>> bipartite_sides(const Graph& g) {
  auto parts = graph::complete_multipartite_parts(g);
  if (!parts || parts->size() != 2) throw InvalidArgument("graph is not complete bipartite");
  return *parts;
}

graph::VertexOrdering default_ordering(const Graph& g) {
  return g.vertex_count() <= graph::kDefaultBandwidthNodeLimit ? graph::bandwidth_exact(g)
                                                               : graph::bandwidth_heuristic(g);
}

graph::VertexOrdering read_ordering(const Graph& g, const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Vertex> order;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw ParseError("negative vertex id in ordering");
    order.push_back(static_cast<Vertex>(v));
  }
  if (!in.eof()) throw ParseError("ordering file must contain vertex ids only");
  return graph::VertexOrdering(g, std::move(order));
}

// Path host over consecutive blocks of a bandwidth ordering.
constructions::HPartition default_partition(const Graph& g) {
  const auto o = default_ordering(g);
  const std::size_t b = std::max<std::size_t>(o.width(), 1);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> assign(n);
  std::vector<std::size_t> slot(n);
  for (std::size_t p = 0; p < n; ++p) {
    assign[o.order()[p]] = static_cast<Vertex>(p / b);
    slot[o.order()[p]] = p % b;
  }
  return {g, graph::make_path(std::max<std::size_t>((n + b - 1) / b, 1)), std::move(assign), std::move(slot)};
}

geometry::Drawing default_host_drawing(const Graph& host) {
  const std::size_t n = host.vertex_count();
  if (n >= 3) return geometry::realize_ngon(host, geometry::identity_assignment(n));
  std::vector<geometry::QPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<long>(i), 0});
  return geometry::make_drawing(host, std::move(pts));
}

struct PartitionInput {
  std::optional<constructions::HPartition> part;
  std::optional<geometry::Drawing> host_drawing;
};

PartitionInput read_partition(const Graph& g, const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
    const auto& host = doc.at("host");
    std::vector<graph::Edge> edges;
    for (const auto& e : host.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    Graph h(host.at("n").get<std::size_t>(), edges);
    auto assign = doc.at("assign").get<std::vector<Vertex>>();
    std::vector<std::size_t> slot;
    if (doc.contains("slot")) slot = doc["slot"].get<std::vector<std::size_t>>();
    PartitionInput in;
    in.part.emplace(g, std::move(h), std::move(assign), std::move(slot));
    if (doc.contains("host_drawing")) in.host_drawing = geometry::drawing_from_json(doc["host_drawing"].dump());
    return in;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed partition file: ") + e.what());
  }
}

// ---- draw -----------------------------------------------------------------

struct DrawOptions {
  std::string method;
  std::string ordering;
  std::string partition;
};

Construction draw_family(const Graph& g, const std::string& method) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> phi(n);
  if (method == "ngon") {
    if (n < 3 || g.edge_count() != n * (n - 1) / 2) throw InvalidArgument("ngon needs a complete graph on >= 3 vertices");
    for (std::size_t v = 0; v < n; ++v) phi[v] = static_cast<Vertex>(v);
    return constructions::relabel(constructions::draw_complete_ngon(n), g, phi);
  }
  if (method == "knn" || method == "kab-rows") {
    auto sides = bipartite_sides(g);
    if (sides[0].size() > sides[1].size()) std::swap(sides[0], sides[1]);
    const std::size_t a = sides[0].size();
    const std::size_t b = sides[1].size();
    if (method == "knn" && a != b) throw InvalidArgument("knn needs K_{n,n}");
    for (std::size_t i = 0; i < a; ++i) phi[sides[0][i]] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < b; ++i) phi[sides[1][i]] = static_cast<Vertex>(a + i);
    return constructions::relabel(method == "knn" ? constructions::draw_knn(a) : constructions::draw_kab_rows(a, b),
                                  g, phi);
  }
  // multipartite-pow2: parts of sizes 2^p, 2^p, 2^(p+1), ...
  auto parts = graph::complete_multipartite_parts(g);
  if (!parts) throw InvalidArgument("graph is not complete multipartite");
  std::stable_sort(parts->begin(), parts->end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const std::size_t k = parts->size();
  const std::size_t small = parts->front().size();
  std::size_t p = 0;
  while ((std::size_t{1} << p) < small) ++p;
  bool shape = (std::size_t{1} << p) == small && (*parts)[1].size() == small;
  for (std::size_t i = 2; i < k; ++i) shape = shape && (*parts)[i].size() == 2 * small;
  if (!shape) throw InvalidArgument("part sizes are not 2^p, 2^p, 2^(p+1), ..., 2^(p+1)");
  const auto target = constructions::power2_partition(p, k);
  // Our two small parts go to P_0 and P_{k-1}, the rest to P_1..P_{k-2}.
  std::vector<std::size_t> into(k);
  into[0] = 0;
  into[1] = k - 1;
  for (std::size_t i = 2; i < k; ++i) into[i] = i - 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& src = (*parts)[i];
    const auto& dst = target.parts[into[i]];
    for (std::size_t j = 0; j < src.size(); ++j) phi[src[j]] = dst[j];
  }
  return constructions::relabel(constructions::draw_multipartite_power2(p, k), g, phi);
}

Construction run_method(const Graph& g, const DrawOptions& o) {
  const std::string& m = o.method;
  if (m == "ngon" || m == "knn" || m == "kab-rows" || m == "multipartite-pow2") return draw_family(g, m);
  if (m == "bandwidth") {
    const auto ordering = o.ordering.empty() ? default_ordering(g) : read_ordering(g, o.ordering);
    return constructions::draw_bandwidth(g, ordering);
  }
  if (m == "tree") {
    if (!graph::is_forest(g)) throw InvalidArgument("tree method needs an acyclic graph");
    return constructions::draw_tree(g);
  }
  if (m == "one-bend") return constructions::draw_one_bend(g);
  PartitionInput in;
  if (!o.partition.empty()) in = read_partition(g, o.partition);
  if (!in.part) in.part = default_partition(g);
  if (m == "tree-partition") return constructions::draw_tree_partitioned(g, *in.part);
  if (!in.host_drawing) in.host_drawing = default_host_drawing(in.part->host());
  return constructions::blow_up(g, *in.host_drawing, *in.part);
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(); }

json certificate_json(const Construction& c) {
  const auto& cert = c.certificate;
  return {{"theorem", std::string(constructions::theorem_name(cert.theorem))},
          {"claimed_slope_bound", cert.claimed_slope_bound},
          {"claimed_length_bound", optional_json(cert.claimed_length_bound)},
          {"alternate_length_bound", optional_json(cert.alternate_length_bound)},
          {"claimed_plane", cert.claimed_plane},
          {"claimed_convex", cert.claimed_convex},
          {"scale", c.scale}};
}

int draw_one(const Graph& g, const DrawOptions& o, const std::string& out_path, const std::string& svg_path,
             std::ostream& out, std::ostream& err) {
  const Construction c = run_method(g, o);
  const auto check = constructions::check_certificate(c);
  json doc = json::parse(geometry::drawing_to_json(c.drawing));
  doc["certificate"] = certificate_json(c);
  doc["measured"] = {{"valid", check.valid_drawing}, {"slopes", check.slopes},     {"lengths", check.lengths},
                     {"crossings", check.crossings}, {"convex", check.convex}};
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    write_file(out_path, text);
  }
  if (!svg_path.empty()) write_file(svg_path, geometry::drawing_to_svg(c.drawing));
  if (!check.ok) {
    err << "certificate violated (" << constructions::theorem_name(c.certificate.theorem) << "):\n";
    for (const auto& v : check.violations) err << "  " << v << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int verify(const std::string& graph_path, const std::string& drawing_path, bool as_json, std::ostream& out) {
  const std::string text = read_file(drawing_path);
  const geometry::Drawing d = geometry::drawing_from_json(text);
  const Graph g = graph_path.empty() ? Graph(d.vertex_count(), d.edges) : graph::parse_graph(read_file(graph_path));
  json doc = json::parse(text);

  const auto report = geometry::validate_drawing(g, d);
  json r;
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  r["valid"] = report.valid;
  r["issues"] = report.issues;
  bool ok = report.valid;
  if (report.valid) {
    const std::size_t slopes = geometry::count_slopes(d);
    const std::size_t lengths = geometry::count_lengths(d);
    const std::size_t crossings = geometry::count_crossings(g, d);
    const bool convex = !d.has_bends() && geometry::is_convex_drawing(g, d);
    const auto lb = bounds::elementary_lower_bounds(d.has_bends() ? geometry::drawn_graph(d) : g);
    const bool eq1 = slopes >= lb.sn && (!convex || slopes >= lb.csn);
    r["slopes"] = slopes;
    r["lengths"] = lengths;
    r["crossings"] = crossings;
    r["convex"] = convex;
    r["bends"] = d.has_bends();
    r["sn_lower_bound"] = lb.sn;
    r["csn_lower_bound"] = lb.csn;
    r["lower_bounds_consistent"] = eq1;
    ok = ok && eq1;
    if (doc.contains("certificate") && doc["certificate"].is_object()) {
      const auto& cert = doc["certificate"];
      std::vector<std::string> violations;
      if (slopes > cert.value("claimed_slope_bound", slopes)) violations.push_back("slopes exceed the claimed bound");
      if (cert.contains("claimed_length_bound") && cert["claimed_length_bound"].is_number() &&
          lengths > cert["claimed_length_bound"].get<std::size_t>()) {
        violations.push_back("lengths exceed the claimed bound");
      }
      if (cert.value("claimed_plane", false) && crossings != 0) violations.push_back("crossings in a plane claim");
      if (cert.value("claimed_convex", false) && !convex) violations.push_back("drawing is not convex");
      r["certificate_ok"] = violations.empty();
      r["certificate_violations"] = violations;
      ok = ok && violations.empty();
    }
  }
  if (as_json) {
    out << r.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : r.items()) {
      if (value.is_array()) {
        for (const auto& item : value) out << key << ": " << item.get<std::string>() << "\n";
      } else if (value.is_boolean()) {
        out << key << " " << (value.get<bool>() ? "yes" : "no") << "\n";
      } else {
        out << key << " " << value.dump() << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitViolation;
}

// ---- bounds ---------------------------------------------------------------

void graph_bounds(const Graph& g, std::ostream& out) {
  const auto lb = bounds::elementary_lower_bounds(g);
  out << "vertices " << g.vertex_count() << "\n"
      << "edges " << g.edge_count() << "\n"
      << "max_degree " << g.max_degree() << "\n"
      << "min_degree " << g.min_degree() << "\n"
      << "sn >= " << lb.sn << "\n"
      << "csn >= " << lb.csn << "\n";
  if (auto parts = graph::complete_multipartite_parts(g); parts && parts->size() == 2) {
    const std::size_t a = std::min((*parts)[0].size(), (*parts)[1].size());
    const std::size_t b = std::max((*parts)[0].size(), (*parts)[1].size());
    const auto [lo, hi] = constructions::kab_slope_bounds(a, b);
    out << "complete_bipartite " << a << " " << b << "\n"
        << "kab sn >= " << lo << "\n"
        << "kab sn <= " << hi << "\n";
  }
}

void counting_bounds(std::size_t delta, double epsilon, double c, unsigned from, unsigned to, std::ostream& out) {
  const auto scan = bounds::counting_scan(delta, epsilon, c, bounds::decade_grid(from, to));
  json doc;
  doc["delta"] = delta;
  doc["epsilon"] = epsilon;
  doc["c"] = c;
  doc["rows"] = json::parse(bounds::rows_to_json(scan.rows));
  doc["first_positive"] = scan.first_positive ? json(*scan.first_positive) : json();
  doc["nondecreasing_after_first"] = scan.nondecreasing_after_first;
  out << doc.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"slopeforge: straight-line and 1-bend drawings with few slopes"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  std::string family;
  std::vector<std::string> family_args;
  std::string gen_out;
  gen->add_option("family", family, "graph family")->required()->check(CLI::IsMember(family_names()));
  gen->add_option("params", family_args, "family parameters");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  gen->add_option("--seed", seed, "random seed (default $SLOPEFORGE_SEED or 1)")->each([&](const std::string&) {
    seed_given = true;
  });

  auto* draw = app.add_subcommand("draw", "construct a drawing and check its certificate");
  DrawOptions draw_opts;
  std::string graph_path;
  std::string gen_spec;
  std::string batch_dir;
  std::string out_path;
  std::string svg_path;
  draw->add_option("-m,--method", draw_opts.method, "construction")->required()->check(CLI::IsMember(kMethods));
  auto* g_opt = draw->add_option("-g,--graph", graph_path, "edge-list file");
  auto* s_opt = draw->add_option("--gen", gen_spec, "generator spec, e.g. complete:8 or multipartite:3,12");
  auto* b_opt = draw->add_option("--batch", batch_dir, "draw every *.txt / *.edges file in a directory");
  g_opt->excludes(s_opt)->excludes(b_opt);
  s_opt->excludes(b_opt);
  draw->add_option("--ordering", draw_opts.ordering, "vertex ordering file (bandwidth)");
  draw->add_option("--partition", draw_opts.partition, "H-partition JSON (blowup, tree-partition)");
  draw->add_option("-o,--out", out_path, "output JSON (default stdout; output directory with --batch)");
  draw->add_option("--svg", svg_path, "also write an SVG rendering");
  draw->add_option("--seed", seed, "random seed for --gen")->each([&](const std::string&) { seed_given = true; });

  auto* ver = app.add_subcommand("verify", "check a drawing and report its measurements");
  std::string verify_graph;
  std::string verify_drawing;
  bool verify_json = false;
  ver->add_option("-g,--graph", verify_graph, "edge-list file (default: the drawing's own edges)");
  ver->add_option("-d,--drawing", verify_drawing, "drawing JSON")->required();
  ver->add_flag("--json", verify_json, "JSON report");

  auto* bnd = app.add_subcommand("bounds", "lower bounds for a graph or the counting evaluator");
  std::string bounds_graph;
  std::string bounds_gen;
  bool counting = false;
  std::size_t delta = 5;
  double epsilon = 1.0;
  double c = 50.0;
  unsigned from = 3;
  unsigned to = 8;
  auto* bg = bnd->add_option("-g,--graph", bounds_graph, "edge-list file");
  auto* bs = bnd->add_option("--gen", bounds_gen, "generator spec");
  auto* bc = bnd->add_flag("--counting", counting, "counting-gap table instead of graph bounds");
  bg->excludes(bs)->excludes(bc);
  bs->excludes(bc);
  bnd->add_option("--delta", delta, "degree for --counting")->check(CLI::Range(3, 1000));
  bnd->add_option("--epsilon", epsilon, "slack for --counting")->check(CLI::PositiveNumber);
  bnd->add_option("--c", c, "constant of the slopeable count")->check(CLI::PositiveNumber);
  bnd->add_option("--from", from, "first decade exponent")->check(CLI::Range(0, 18));
  bnd->add_option("--to", to, "last decade exponent")->check(CLI::Range(0, 18));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (*gen) {
      const std::string text = graph::serialize_graph(make_family(family, family_args, seed));
      if (gen_out.empty() || gen_out == "-") {
        out << text;
      } else {
        write_file(gen_out, text);
      }
      return kExitOk;
    }
    if (*draw) {
      if (!batch_dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(batch_dir)) {
          const auto ext = entry.path().extension();
          if (entry.is_regular_file() && (ext == ".txt" || ext == ".edges")) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        const fs::path dest = out_path.empty() ? fs::path(batch_dir) : fs::path(out_path);
        fs::create_directories(dest);
        int worst = kExitOk;
        for (const auto& f : files) {
          const Graph g = graph::parse_graph(read_file(f.string()));
          const fs::path json_path = dest / (f.stem().string() + ".json");
          const std::string svg = svg_path.empty() ? "" : (dest / (f.stem().string() + ".svg")).string();
          std::ostringstream sink;
          const int code = draw_one(g, draw_opts, json_path.string(), svg, sink, err);
          out << f.filename().string() << " " << (code == kExitOk ? "verified" : "violation") << "\n";
          worst = std::max(worst, code);
        }
        return worst;
      }
      if (graph_path.empty() && gen_spec.empty()) throw InvalidArgument("draw needs --graph, --gen or --batch");
      const Graph g = graph_path.empty() ? make_family_spec(gen_spec, seed) : graph::parse_graph(read_file(graph_path));
      return draw_one(g, draw_opts, out_path, svg_path, out, err);
    }
    if (*ver) return verify(verify_graph, verify_drawing, verify_json, out);
    if (*bnd) {
      if (counting) {
        if (from > to) throw InvalidArgument("--from must not exceed --to");
        counting_bounds(delta, epsilon, c, from, to, out);
        return kExitOk;
      }
      if (bounds_graph.empty() && bounds_gen.empty()) throw InvalidArgument("bounds needs --graph, --gen or --counting");
      graph_bounds(bounds_graph.empty() ? make_family_spec(bounds_gen, seed) : graph::parse_graph(read_file(bounds_graph)),
                   out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace slopeforge::cli
