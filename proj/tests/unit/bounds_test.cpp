#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "slopeforge/bounds.hpp"
#include "slopeforge/errors.hpp"

using namespace slopeforge;
using namespace slopeforge::bounds;

TEST(ElementaryBoundsTest, Values) {
  const auto k5 = elementary_lower_bounds(graph::make_complete(5));
  EXPECT_EQ(k5.sn, 4u);
  EXPECT_EQ(k5.csn, 4u);
  const auto star = elementary_lower_bounds(graph::make_star(7));
  EXPECT_EQ(star.sn, 4u);
  EXPECT_EQ(star.csn, 7u);
  const auto empty = elementary_lower_bounds(graph::Graph(3));
  EXPECT_EQ(empty.sn, 0u);
}

TEST(CountingTest, LogGammaMatchesExactOracle) {
  for (unsigned long n = 2; n <= 50; n += 3) {
    for (unsigned long k = 1; k <= 10; ++k) {
      for (unsigned long m : {0ul, 1ul, n, k * (n - 1) / 2, k * (n - 1)}) {
        const double want = oracle::log_count_slopeable_exact(n, m, k, 50);
        for (auto method : {BinomialMethod::log_gamma, BinomialMethod::exact, BinomialMethod::automatic}) {
          const double got = log_count_slopeable(n, m, k, 50.0, method);
          if (std::isinf(want)) {
            EXPECT_EQ(got, want);
            continue;
          }
          EXPECT_LT(std::abs(got - want), 1e-9 * std::abs(want)) << n << " " << m << " " << k;
        }
      }
    }
  }
}

TEST(CountingTest, ZeroCountBeyondEdgeSlots) {
  EXPECT_EQ(log_count_slopeable(10, 10, 1), -std::numeric_limits<double>::infinity());
}

TEST(CountingTest, RegularCount) {
  // (n/3D)^(Dn/2)
  EXPECT_NEAR(log_count_regular(600, 5), 1500 * std::log(40.0), 1e-9);
}

TEST(CountingTest, GapRowAndValidation) {
  const GapRow r = counting_gap({12, 1.0, 1000, 50.0});
  EXPECT_EQ(r.m, 6000u);
  // k = ceil(1000^(7/16)) = ceil(20.54)
  EXPECT_EQ(r.k, 21u);
  EXPECT_TRUE(std::isfinite(r.log_slopeable));
  EXPECT_NEAR(r.gap, r.log_regular - r.log_slopeable, 1e-9 * std::abs(r.log_regular));
  EXPECT_THROW(counting_gap({2, 1.0, 1000, 50.0}), InvalidArgument);
  EXPECT_THROW(counting_gap({5, 0.0, 1000, 50.0}), InvalidArgument);
  EXPECT_THROW(counting_gap({5, 1.0, 1001, 50.0}), InvalidArgument);
}

TEST(CountingTest, ZeroSlopeableCountGivesInfiniteGap) {
  // D=6, eps=1: k = 2 slots per vertex cannot hold 3n edges
  const GapRow r = counting_gap({6, 1.0, 1000, 50.0});
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.gap, std::numeric_limits<double>::infinity());
}

TEST(CountingTest, ScanFindsPositiveGap) {
  const auto scan = counting_scan(5, 1.0, 50.0, decade_grid(3, 8));
  EXPECT_EQ(scan.rows.size(), 6u);
  ASSERT_TRUE(scan.first_positive);
  EXPECT_TRUE(scan.nondecreasing_after_first);
}

TEST(CountingTest, DecadeGrid) {
  EXPECT_EQ(decade_grid(3, 5), (std::vector<std::size_t>{1000, 10000, 100000}));
}

TEST(CountingTest, JsonInfinity) {
  const auto scan = counting_scan(5, 1.0, 50.0, decade_grid(3, 3));
  const std::string j = rows_to_json(scan.rows);
  EXPECT_NE(j.find("\"n\""), std::string::npos);
}
