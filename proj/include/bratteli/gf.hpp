#pragma once

#include <cstddef>
#include <vector>

#include "bratteli/count.hpp"
#include "bratteli/poly.hpp"

namespace bratteli {

/// Rational formal power series num/den, kept reduced: num and den share no
/// nonconstant factor and den(0) = +1.
class RationalGF {
 public:
  /// Reduces num/den. Throws DomainError if den(0) = 0 or if the reduced
  /// denominator cannot be normalized to den(0) = 1 over the integers.
  RationalGF(IntPoly num, IntPoly den);
  RationalGF() : RationalGF(IntPoly{}, IntPoly{1}) {}

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }

  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);

  /// 1/g; requires g(0) = ±1.
  RationalGF reciprocal() const;
  /// x^n * g
  RationalGF shifted(std::size_t n) const;
  /// g(x^2)
  RationalGF substitute_square() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  IntPoly num_;
  IntPoly den_;
};

/// Recurrence c_m = coeffs[0] c_{m-1} + ... + coeffs[order-1] c_{m-order},
/// read off a denominator 1 - coeffs[0] t - ... - coeffs[order-1] t^order.
/// `initial` holds every leading coefficient the recurrence does not
/// determine: max(order, deg num + 1) terms. The rule applies for
/// m >= initial.size().
struct LinearRecurrence {
  std::size_t order = 0;
  std::vector<Integer> coeffs;
  std::vector<Integer> initial;

  /// First n+1 terms of the sequence.
  std::vector<Integer> replay(std::size_t n) const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// Chebyshev polynomial of the second kind U_r (U_0 = 1, U_1 = 2x,
/// U_{r+1} = 2x U_r - U_{r-1}).
IntPoly chebyshev_u(std::size_t r);

/// Reversed Chebyshev polynomial x^m U_m(1/(2x)): the even polynomial with
/// coefficient (-1)^t binom(m-t, t) on x^{2t}.
IntPoly u_hat(std::size_t m);

/// E_m(x) = u_hat(m) evaluated at sqrt(x); E_{-1} = 0 is reachable via m = -1.
IntPoly u_hat_sqrt(long m);

/// R_k(x): generating function of Dyck paths of height < k by half-length.
/// Computed as E_{k-1}/E_k.
RationalGF r_k(Level k);

/// D_k(x;i) = R_{k+1}(x^2) * prod_{r=1..i} x R_{k+1-r}(x^2).
/// Throws DomainError if i > k.
RationalGF gf_product(Level k, std::uint32_t i);

/// D_k(x;i) = x^i u_hat(k-i) / u_hat(k+1). Throws DomainError if i > k.
RationalGF gf_closed(Level k, std::uint32_t i);

enum class Expansion {
  Counting,  ///< every coefficient must be nonnegative
  Signed,
};

/// Power-series coefficients c_0..c_n. With Expansion::Counting a negative
/// coefficient throws IntegralityError.
std::vector<Integer> series_coeffs(const RationalGF& g, std::size_t n,
                                   Expansion mode = Expansion::Counting);

/// D_k(i,j) read from the series of gf_closed(k,i); 0 when i > k.
Count count_gf(const Query& q);

LinearRecurrence recurrence_from_gf(const RationalGF& g);

/// Parity-compressed form of a generating function whose series lives on a
/// single residue class mod 2: g(x) = x^shift * compressed(x^2).
struct EvenForm {
  unsigned shift = 0;
  RationalGF compressed;
};

/// Throws DomainError when g is not of the form x^s h(x^2).
EvenForm even_form(const RationalGF& g);

}  // namespace bratteli
