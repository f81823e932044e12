#pragma once

#include <cstdint>
#include <vector>

#include "bratteli/count.hpp"
#include "bratteli/real.hpp"

namespace bratteli {

/// Precision schedule for count_spectral: evaluation starts at
/// max(initial_bits, j + 32) bits and doubles up to max_bits. A value is
/// accepted when it lies within accept_distance of an integer at two
/// consecutive precisions that round to the same integer.
struct PrecisionPolicy {
  Bits initial_bits = 64;
  Bits max_bits = Bits{1} << 16;
  double accept_distance = 1.0 / 65536.0;

  /// Throws DomainError unless initial_bits >= 64, max_bits >= initial_bits
  /// and 0 < accept_distance <= 2^-16.
  void validate() const;
};

/// Poles rho_{m,r} = cos(r pi / (m+1)), r = 1..m, of U_m: strictly decreasing.
std::vector<Real> roots_u(std::uint32_t m, Bits bits);

/// U_n(x) by the three-term recurrence in x's precision. U_{-1} = 0.
Real chebyshev_u_value(long n, const Real& x);

/// The residue expansion of D_k(x;i):
///   D_k(x;i) = sum_r weight_r / (1 - pole_r x)
/// with pole_r = 2 cos(r pi/(k+2)) and
///   weight_r = (2/(k+2)) (-1)^{r+1} U_{k-i}(cos(r pi/(k+2))) sin^2(r pi/(k+2)),
/// so that D_k(i,j) = sum_r weight_r pole_r^j.
class SpectralDecomposition {
 public:
  struct Term {
    Real weight;
    Real pole;
  };

  SpectralDecomposition(Level k, std::uint32_t i, Bits bits);

  Level k() const noexcept { return k_; }
  std::uint32_t i() const noexcept { return i_; }
  Bits bits() const noexcept { return bits_; }
  /// terms()[r-1] for r = 1..k+1.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Partial-fraction coefficient a_{k+1,r} = weight_r / 2 of
  /// U_{k-i}(x) / U_{k+1}(x) at the root rho_{k+1,r} = pole_r / 2.
  Real residue(std::size_t r) const;

  /// sum_r a_{k+1,r} / (x - rho_{k+1,r}).
  Real partial_fraction(const Real& x) const;

  /// sum_r weight_r pole_r^j at the decomposition's precision.
  Real power_sum(std::uint32_t j) const;

  /// sum_r weight_r, i.e. D_k(i,0).
  Real weight_sum() const;

 private:
  Level k_;
  std::uint32_t i_;
  Bits bits_;
  std::vector<Term> terms_;
};

/// Throws DomainError if i > k.
SpectralDecomposition residues(Level k, std::uint32_t i, Bits bits);

/// D_k(i,j) from the residue power sum, rounded to the nearest integer under
/// the adaptive precision policy. Returns 0 when i > k. Throws
/// PrecisionExhausted if no precision up to max_bits is accepted.
Count count_spectral(const Query& q, const PrecisionPolicy& policy = {});

/// Dominant pole 2 cos(pi/(k+2)), the exponential growth rate of D_k(i,j).
Real growth_rate(Level k, Bits bits);

/// sqrt(D_k(i,jmax) / D_k(i,jmax-2)) from exact counts. Throws DomainError if
/// either count is 0.
Real empirical_rate(Level k, std::uint32_t i, std::uint32_t jmax, Bits bits = 256);

}  // namespace bratteli
