#pragma once

#include <cstdint>
#include <optional>

#include "bratteli/count.hpp"

namespace bratteli {

/// Ballot number ((i+1)/(j+1)) binom(j+1, (j-i)/2): paths with no height
/// bound. 0 unless i <= j and i = j (mod 2).
Count count_unbounded(std::uint32_t i, std::uint32_t j);

Count catalan(std::uint32_t n);

/// Fibonacci numbers extended by F_{-1} = 1. Throws DomainError for m < -1.
Count fibonacci(long m);

/// A level with a printed closed form: 1..5, or unbounded.
class SpecialCaseId {
 public:
  /// Throws DomainError unless 1 <= k <= 5.
  static SpecialCaseId level(Level k);
  static SpecialCaseId unbounded() noexcept { return SpecialCaseId{}; }

  bool is_unbounded() const noexcept { return !level_.has_value(); }
  /// Requires !is_unbounded().
  Level k() const { return *level_; }

 private:
  SpecialCaseId() = default;
  std::optional<Level> level_;
};

/// Closed-form D_k(i,j) for the levels that have one:
///   k=1  D(0,2j) = D(1,2j+1) = 1
///   k=2  D(0,2j) = D(2,2j) = 2^{j-1} (j >= 1), D(0,0) = 1, D(1,2j+1) = 2^j
///   k=3  D(0,2j) = F_{2j-1}, D(1,2j+1) = F_{2j+1}, D(2,2j+2) = D(3,2j+3) = F_{2j+2}
///   k=4  D(0,2j+2) = D(1,2j+1) = (3^j+1)/2, D(2,2j+2) = 3^j,
///        D(3,2j+3) = D(4,2j+4) = (3^{j+1}-1)/2, D(0,0) = 1
///   k=5  differences of a_m = 5a_{m-1} - 6a_{m-2} + a_{m-3}, a_0 = a_1 = 1, a_2 = 2
/// Unreachable vertices give 0.
Count special_case(SpecialCaseId id, std::uint32_t i, std::uint32_t j);

/// a_m of the k=5 closed form.
Count level5_sequence(std::uint32_t m);

}  // namespace bratteli
