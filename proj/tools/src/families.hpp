#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slopeforge/graph.hpp"

namespace slopeforge::cli {

// Generator families by name:
//   complete N | multipartite A,B,... | path N | cycle N | star LEAVES |
//   grid ROWS COLS | petersen | binary-tree LEVELS | spider LEGS LENGTH |
//   tree-random N MAXDEG | random N P MAXDEG
// Throws InvalidArgument on unknown families or bad parameters.
graph::Graph make_family(std::string_view family, const std::vector<std::string>& args, std::uint64_t seed);

// "family:a,b,c" form used by --gen, e.g. "multipartite:3,12".
graph::Graph make_family_spec(std::string_view spec, std::uint64_t seed);

const std::vector<std::string>& family_names();

}  // namespace slopeforge::cli
