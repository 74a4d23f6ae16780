#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive: brute force, rational arithmetic, pairwise comparisons.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "slopeforge/geometry.hpp"
#include "slopeforge/graph.hpp"

namespace oracle {

using slopeforge::graph::Graph;

// Minimum ordering width over all n! permutations.
std::size_t bandwidth_bruteforce(const Graph& g);

// Pathwidth as vertex separation number, by dynamic programming over
// vertex subsets (n <= 20).
std::size_t pathwidth_vsn(const Graph& g);

struct RPoint {
  mpq_class x;
  mpq_class y;
};

// Points and segments of the drawn graph, in rationals (numeric drawings are
// converted exactly from their doubles).
struct RDrawing {
  std::size_t vertices = 0;
  std::vector<RPoint> points;
  std::vector<std::pair<std::size_t, std::size_t>> segments;
};

RDrawing to_rational(const slopeforge::geometry::Drawing& d);

// Number of classes of pairwise-parallel segments (cross product zero).
std::size_t slope_count(const RDrawing& d);
// Number of distinct squared lengths.
std::size_t length_count(const RDrawing& d);
// Pairs of segments sharing a point other than a common endpoint, by solving
// the 2x2 parametric system.
std::size_t crossing_count(const RDrawing& d);
// Some point lies in the relative interior of a segment it is not an endpoint
// of, or two points coincide.
bool has_incidence_violation(const RDrawing& d);

// |{(i+j) mod n}| over edges.
std::size_t ngon_residues(const Graph& g, const std::vector<std::size_t>& index, std::size_t n);

// ln of (c n^2 (k+1)/(2n+k))^(2n+k) * C(k(n-1), m), evaluated as one exact
// rational before taking the logarithm. c must be an integer.
double log_count_slopeable_exact(unsigned long n, unsigned long m, unsigned long k, unsigned long c);

// All labelled trees on n vertices (Pruefer decoding), n >= 2.
std::vector<Graph> all_labelled_trees(std::size_t n);

}  // namespace oracle
