#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "slopeforge/geometry.hpp"

namespace slopeforge::geometry::detail {

// Orientation and incidence predicates on rational points. All points are
// scaled by the lcm of their denominators; when the resulting integers fit
// in 61 bits the predicates run in __int128, otherwise in mpz.
class ExactKernel {
 public:
  explicit ExactKernel(const std::vector<QPoint>& points);

  std::size_t size() const noexcept { return small_ ? fast_.size() : big_.size(); }
  // Sign of (b - a) x (c - a).
  int orient(std::size_t a, std::size_t b, std::size_t c) const;
  // Sign of (b - a) . (c - a).
  int dot_sign(std::size_t a, std::size_t b, std::size_t c) const;
  bool same_point(std::size_t a, std::size_t b) const;
  // p on the closed segment ab.
  bool on_segment(std::size_t p, std::size_t a, std::size_t b) const;
  // Closed segments ab and cd share a point.
  bool segments_meet(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  // Lexicographic comparison of points.
  bool less(std::size_t a, std::size_t b) const;

 private:
  bool in_box(std::size_t p, std::size_t a, std::size_t b) const;

  bool small_ = true;
  std::vector<std::array<std::int64_t, 2>> fast_;
  std::vector<std::array<mpz_class, 2>> big_;
};

}  // namespace slopeforge::geometry::detail
