#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

#include "subshift/error.hpp"

namespace subshift {

/// Largest supported p + q. Inputs beyond it are rejected instead of risking
/// overflow in downstream products.
inline constexpr std::int64_t kMaxPeriodSum = 1'000'000;

/// Restricted Bezout coefficients (a, b) for the ordered pair (q, p):
/// b*q - a*p = 1 with 0 <= a < q and 0 < b <= p.
struct BezoutPair {
  std::int64_t q = 1;
  std::int64_t p = 1;
  std::int64_t a = 0;
  std::int64_t b = 1;

  bool operator==(const BezoutPair&) const = default;

  bool valid() const {
    return q > 0 && p > 0 && std::gcd(p, q) == 1 && 0 <= a && a < q && 0 < b && b <= p && b * q - a * p == 1;
  }
};

namespace detail {

/// Returns (g, x, y) with x*m + y*n = g = gcd(m, n).
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t m, std::int64_t n) {
  std::int64_t old_r = m, r = n;
  std::int64_t old_x = 1, x = 0;
  std::int64_t old_y = 0, y = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - quot * r);
    std::tie(old_x, x) = std::make_tuple(x, old_x - quot * x);
    std::tie(old_y, y) = std::make_tuple(y, old_y - quot * y);
  }
  return {old_r, old_x, old_y};
}

inline void check_frequency_pair(std::int64_t q, std::int64_t p) {
  if (q <= 0 || p <= 0) throw Error(ErrorKind::NonPositive, "q and p must be positive");
  if (q + p > kMaxPeriodSum)
    throw Error(ErrorKind::Overflow, "p + q exceeds " + std::to_string(kMaxPeriodSum));
  if (std::gcd(q, p) != 1)
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(q) + ", " + std::to_string(p) + ") != 1");
}

}  // namespace detail

inline BezoutPair restricted_bezout(std::int64_t q, std::int64_t p) {
  detail::check_frequency_pair(q, p);
  // x*q + y*p = 1, so b = x (mod p) moved into (0, p].
  auto [g, x, y] = detail::extended_gcd(q, p);
  (void)y;
  std::int64_t b = x % p;
  if (b <= 0) b += p;
  const std::int64_t a = (b * q - 1) / p;
  BezoutPair out{q, p, a, b};
  if (g != 1 || !out.valid()) throw Error(ErrorKind::InternalMismatch, "Bezout translation failed");
  return out;
}

/// Coefficients for the swapped pair (p, q): (p - b, q - a).
inline BezoutPair swapped_pair(const BezoutPair& bp) {
  return BezoutPair{bp.p, bp.q, bp.p - bp.b, bp.q - bp.a};
}

}  // namespace subshift
