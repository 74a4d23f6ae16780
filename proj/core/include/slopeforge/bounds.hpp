#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slopeforge/graph.hpp"

namespace slopeforge::bounds {

struct ElementaryBounds {
  // max(ceil(D/2), delta)
  std::size_t sn = 0;
  // D
  std::size_t csn = 0;
};

ElementaryBounds elementary_lower_bounds(const graph::Graph& g);

// Natural log of (n / 3D)^(D n / 2).
double log_count_regular(double n, double delta);

enum class BinomialMethod { automatic, log_gamma, exact };

// Natural log of (c n^2 (k+1) / (2n+k))^(2n+k) * C(k(n-1), m). Returns
// -infinity when m > k(n-1) (the count is zero). `automatic` uses exact
// integer binomials for n <= 50 and log-gamma above.
double log_count_slopeable(std::size_t n, std::size_t m, std::size_t k, double c = 50.0,
                           BinomialMethod method = BinomialMethod::automatic);

struct CountingParams {
  std::size_t delta = 5;
  double epsilon = 1.0;
  std::size_t n = 1000;
  double c = 50.0;
};

struct GapRow {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  double log_regular = 0;
  double log_slopeable = 0;
  // log_regular - log_slopeable; +infinity when the slopeable count is zero.
  double gap = 0;
};

// k = ceil(n^(1 - (8+eps)/(D+4))), m = D n / 2. Throws InvalidArgument for
// D < 3, eps <= 0, or n D odd.
GapRow counting_gap(const CountingParams& params);

struct GapScan {
  std::vector<GapRow> rows;
  // Smallest scanned n with a positive gap.
  std::optional<std::size_t> first_positive;
  // Gaps never decrease after first_positive.
  bool nondecreasing_after_first = true;
};

GapScan counting_scan(std::size_t delta, double epsilon, double c, const std::vector<std::size_t>& ns);

// n = 10^lo .. 10^hi.
std::vector<std::size_t> decade_grid(unsigned lo, unsigned hi);

// JSON array of {n, k, log_regular, log_slopeable, gap}; infinities are
// written as the strings "inf" / "-inf".
std::string rows_to_json(const std::vector<GapRow>& rows);

}  // namespace slopeforge::bounds
