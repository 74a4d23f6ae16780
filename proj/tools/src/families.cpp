#include "families.hpp"

#include <charconv>
#include <sstream>

#include "slopeforge/errors.hpp"

namespace slopeforge::cli {

namespace {

std::size_t to_size(const std::string& s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidArgument("expected a non-negative integer, got '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InvalidArgument("expected a number, got '" + s + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

void expect_args(std::string_view family, const std::vector<std::string>& args, std::size_t count) {
  if (args.size() != count) {
    throw InvalidArgument(std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"complete",    "multipartite", "path",   "cycle",
                                              "star",        "grid",         "petersen", "binary-tree",
                                              "spider",      "tree-random",  "random"};
  return names;
}

graph::Graph make_family(std::string_view family, const std::vector<std::string>& args, std::uint64_t seed) {
  if (family == "complete") {
    expect_args(family, args, 1);
    return graph::make_complete(to_size(args[0]));
  }
  if (family == "multipartite") {
    std::vector<std::size_t> sizes;
    for (const auto& a : args) {
      for (const auto& part : split(a, ',')) sizes.push_back(to_size(part));
    }
    return graph::make_complete_multipartite(sizes);
  }
  if (family == "path") {
    expect_args(family, args, 1);
    return graph::make_path(to_size(args[0]));
  }
  if (family == "cycle") {
    expect_args(family, args, 1);
    return graph::make_cycle(to_size(args[0]));
  }
  if (family == "star") {
    expect_args(family, args, 1);
    return graph::make_star(to_size(args[0]));
  }
  if (family == "grid") {
    expect_args(family, args, 2);
    return graph::make_grid(to_size(args[0]), to_size(args[1]));
  }
  if (family == "petersen") {
    expect_args(family, args, 0);
    return graph::make_petersen();
  }
  if (family == "binary-tree") {
    expect_args(family, args, 1);
    return graph::make_complete_binary_tree(to_size(args[0]));
  }
  if (family == "spider") {
    expect_args(family, args, 2);
    return graph::make_spider(to_size(args[0]), to_size(args[1]));
  }
  if (family == "tree-random") {
    expect_args(family, args, 2);
    return graph::make_random_tree(to_size(args[0]), to_size(args[1]), seed);
  }
  if (family == "random") {
    expect_args(family, args, 3);
    return graph::make_random_graph(to_size(args[0]), to_double(args[1]), to_size(args[2]), seed);
  }
  throw InvalidArgument("unknown family '" + std::string(family) + "'");
}

graph::Graph make_family_spec(std::string_view spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string_view::npos) {
    args = split(spec.substr(colon + 1), ',');
  }
  return make_family(family, args, seed);
}

}  // namespace slopeforge::cli
