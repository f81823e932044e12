#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bratteli {

/// Exact path count. Arbitrary precision; counts reach 2^j scale.
using Count = mpz_class;

/// Signed arbitrary-precision integer used for polynomial coefficients.
using Integer = mpz_class;

using Level = std::uint32_t;

/// Addresses one vertex of the diagram D_k: height i (y-coordinate) first,
/// length j (x-coordinate) second. Every triple is a valid query; vertices
/// that cannot be reached from the origin simply count 0.
struct Query {
  Level k = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

/// True iff D_k(i,j) > 0: i <= k, i <= j, i and j of equal parity, and at
/// least one arc exists (k >= 1) unless the query is the origin itself.
constexpr bool is_reachable(Level k, std::uint32_t i, std::uint32_t j) noexcept {
  if (i > k || i > j || ((i ^ j) & 1U) != 0) return false;
  return k >= 1 || j == 0;
}

constexpr bool is_reachable(const Query& q) noexcept {
  return is_reachable(q.k, q.i, q.j);
}

std::string to_string(const Query& q);

}  // namespace bratteli
