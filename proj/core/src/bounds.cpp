#include "slopeforge/bounds.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include "json.hpp"

#include "slopeforge/errors.hpp"

namespace slopeforge::bounds {

namespace {

constexpr std::size_t kExactBinomialLimit = 50;

double log_mpz(const mpz_class& z) {
  if (z <= 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_binomial(std::size_t n, std::size_t k, bool exact) {
  if (exact) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return log_mpz(b);
  }
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1);
}

nlohmann::json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

ElementaryBounds elementary_lower_bounds(const graph::Graph& g) {
  const std::size_t delta = g.max_degree();
  return {std::max((delta + 1) / 2, g.min_degree()), delta};
}

double log_count_regular(double n, double delta) {
  return delta * n / 2 * (std::log(n) - std::log(3 * delta));
}

double log_count_slopeable(std::size_t n, std::size_t m, std::size_t k, double c, BinomialMethod method) {
  if (n == 0) throw InvalidArgument("log_count_slopeable needs n >= 1");
  const std::size_t slots = k * (n - 1);
  if (m > slots) return -std::numeric_limits<double>::infinity();
  const bool exact = method == BinomialMethod::exact ||
                     (method == BinomialMethod::automatic && n <= kExactBinomialLimit);
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  const double e = 2 * nd + kd;
  return e * std::log(c * nd * nd * (kd + 1) / e) + log_binomial(slots, m, exact);
}

GapRow counting_gap(const CountingParams& p) {
  if (p.delta < 3) throw InvalidArgument("counting_gap needs degree >= 3");
  if (!(p.epsilon > 0)) throw InvalidArgument("counting_gap needs epsilon > 0");
  if (p.n == 0) throw InvalidArgument("counting_gap needs n >= 1");
  if ((p.n * p.delta) % 2 != 0) throw InvalidArgument("n * degree must be even for a regular graph");
  GapRow row;
  row.n = p.n;
  const double exponent = 1.0 - (8.0 + p.epsilon) / (static_cast<double>(p.delta) + 4.0);
  row.k = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(p.n), exponent)));
  row.m = p.delta * p.n / 2;
  row.log_regular = log_count_regular(static_cast<double>(p.n), static_cast<double>(p.delta));
  row.log_slopeable = log_count_slopeable(p.n, row.m, row.k, p.c);
  row.gap = std::isinf(row.log_slopeable) ? std::numeric_limits<double>::infinity()
                                          : row.log_regular - row.log_slopeable;
  return row;
}

GapScan counting_scan(std::size_t delta, double epsilon, double c, const std::vector<std::size_t>& ns) {
  GapScan scan;
  for (std::size_t n : ns) {
    scan.rows.push_back(counting_gap({delta, epsilon, n, c}));
    const auto& row = scan.rows.back();
    if (!scan.first_positive && row.gap > 0) scan.first_positive = n;
  }
  bool after = false;
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    if (scan.first_positive && scan.rows[i].n == *scan.first_positive) after = true;
    if (after && i + 1 < scan.rows.size() && scan.rows[i + 1].gap < scan.rows[i].gap) {
      scan.nondecreasing_after_first = false;
    }
  }
  return scan;
}

std::vector<std::size_t> decade_grid(unsigned lo, unsigned hi) {
  std::vector<std::size_t> out;
  std::size_t v = 1;
  for (unsigned e = 0; e <= hi; ++e, v *= 10) {
    if (e >= lo) out.push_back(v);
  }
  return out;
}

std::string rows_to_json(const std::vector<GapRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"k", r.k},
                   {"log_regular", number_or_inf(r.log_regular)},
                   {"log_slopeable", number_or_inf(r.log_slopeable)},
                   {"gap", number_or_inf(r.gap)}});
  }
  return out.dump(2);
}

}  // namespace slopeforge::bounds
