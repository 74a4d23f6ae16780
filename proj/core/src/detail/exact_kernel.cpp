#include "detail/exact_kernel.hpp"

#include <algorithm>

namespace slopeforge::geometry::detail {

namespace {

template <typename T>
int sign(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

ExactKernel::ExactKernel(const std::vector<QPoint>& points) {
  mpz_class l = 1;
  for (const auto& p : points) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.x.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.get_den_mpz_t());
  }
  big_.reserve(points.size());
  const mpz_class limit = mpz_class(1) << 61;
  for (const auto& p : points) {
    mpz_class x = p.x.get_num() * (l / p.x.get_den());
    mpz_class y = p.y.get_num() * (l / p.y.get_den());
    if (abs(x) >= limit || abs(y) >= limit) small_ = false;
    big_.push_back({std::move(x), std::move(y)});
  }
  if (small_) {
    fast_.reserve(big_.size());
    for (const auto& p : big_) fast_.push_back({p[0].get_si(), p[1].get_si()});
    big_.clear();
  }
}

int ExactKernel::orient(std::size_t a, std::size_t b, std::size_t c) const {
  if (small_) {
    const auto& A = fast_[a];
    const auto& B = fast_[b];
    const auto& C = fast_[c];
    const __int128 v = static_cast<__int128>(B[0] - A[0]) * (C[1] - A[1]) -
                       static_cast<__int128>(B[1] - A[1]) * (C[0] - A[0]);
    return sign(v);
  }
  const auto& A = big_[a];
  const auto& B = big_[b];
  const auto& C = big_[c];
  mpz_class v = (B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0]);
  return sgn(v);
}

int ExactKernel::dot_sign(std::size_t a, std::size_t b, std::size_t c) const {
  if (small_) {
    const auto& A = fast_[a];
    const auto& B = fast_[b];
    const auto& C = fast_[c];
    const __int128 v = static_cast<__int128>(B[0] - A[0]) * (C[0] - A[0]) +
                       static_cast<__int128>(B[1] - A[1]) * (C[1] - A[1]);
    return sign(v);
  }
  const auto& A = big_[a];
  const auto& B = big_[b];
  const auto& C = big_[c];
  mpz_class v = (B[0] - A[0]) * (C[0] - A[0]) + (B[1] - A[1]) * (C[1] - A[1]);
  return sgn(v);
}

bool ExactKernel::same_point(std::size_t a, std::size_t b) const {
  return small_ ? fast_[a] == fast_[b] : big_[a] == big_[b];
}

bool ExactKernel::less(std::size_t a, std::size_t b) const {
  if (small_) return fast_[a] < fast_[b];
  return big_[a][0] != big_[b][0] ? big_[a][0] < big_[b][0] : big_[a][1] < big_[b][1];
}

bool ExactKernel::in_box(std::size_t p, std::size_t a, std::size_t b) const {
  if (small_) {
    const auto& P = fast_[p];
    const auto& A = fast_[a];
    const auto& B = fast_[b];
    return std::min(A[0], B[0]) <= P[0] && P[0] <= std::max(A[0], B[0]) && std::min(A[1], B[1]) <= P[1] &&
           P[1] <= std::max(A[1], B[1]);
  }
  const auto& P = big_[p];
  const auto& A = big_[a];
  const auto& B = big_[b];
  return std::min(A[0], B[0]) <= P[0] && P[0] <= std::max(A[0], B[0]) && std::min(A[1], B[1]) <= P[1] &&
         P[1] <= std::max(A[1], B[1]);
}

bool ExactKernel::on_segment(std::size_t p, std::size_t a, std::size_t b) const {
  return orient(a, b, p) == 0 && in_box(p, a, b);
}

bool ExactKernel::segments_meet(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && in_box(c, a, b)) || (o2 == 0 && in_box(d, a, b)) || (o3 == 0 && in_box(a, c, d)) ||
         (o4 == 0 && in_box(b, c, d));
}

}  // namespace slopeforge::geometry::detail
