#include "bratteli/spectral.hpp"

#include <algorithm>
#include <optional>

#include "bratteli/diagram.hpp"
#include "bratteli/errors.hpp"

namespace bratteli {

void PrecisionPolicy::validate() const {
  if (initial_bits < 64) throw DomainError("initial_bits must be at least 64");
  if (max_bits < initial_bits) throw DomainError("max_bits must be at least initial_bits");
  if (!(accept_distance > 0.0) || accept_distance > 1.0 / 65536.0)
    throw DomainError("accept_distance must lie in (0, 2^-16]");
}

std::vector<Real> roots_u(std::uint32_t m, Bits bits) {
  if (m == 0) throw DomainError("U_0 has no roots");
  const Real pi = Real::pi(bits);
  std::vector<Real> out;
  out.reserve(m);
  for (std::uint32_t r = 1; r <= m; ++r) out.push_back(cos(pi * static_cast<long>(r) / static_cast<long>(m + 1)));
  return out;
}

Real chebyshev_u_value(long n, const Real& x) {
  if (n < 0) return Real(x.precision());
  Real prev(1L, x.precision());
  if (n == 0) return prev;
  const Real two_x = x * 2L;
  Real cur = two_x;
  for (long t = 1; t < n; ++t) {
    Real next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SpectralDecomposition::SpectralDecomposition(Level k, std::uint32_t i, Bits bits)
    : k_(k), i_(i), bits_(bits) {
  if (i > k)
    throw DomainError("height i=" + std::to_string(i) + " exceeds level k=" + std::to_string(k));
  const long denom = static_cast<long>(k) + 2;
  const Real pi = Real::pi(bits);
  terms_.reserve(std::size_t{k} + 1);
  for (long r = 1; r <= static_cast<long>(k) + 1; ++r) {
    const Real theta = pi * r / denom;
    const Real rho = cos(theta);
    const Real s = sin(theta);
    Real weight = chebyshev_u_value(static_cast<long>(k) - static_cast<long>(i), rho) * s * s * 2L / denom;
    if (r % 2 == 0) weight = -weight;
    terms_.push_back(Term{std::move(weight), rho * 2L});
  }
}

Real SpectralDecomposition::residue(std::size_t r) const {
  if (r == 0 || r > terms_.size()) throw DomainError("residue index out of range");
  return terms_[r - 1].weight / 2L;
}

Real SpectralDecomposition::partial_fraction(const Real& x) const {
  Real sum(std::max(bits_, x.precision()));
  for (const auto& t : terms_) sum += (t.weight / 2L) / (x - t.pole / 2L);
  return sum;
}

Real SpectralDecomposition::power_sum(std::uint32_t j) const {
  Real sum(bits_);
  for (const auto& t : terms_) sum += t.weight * pow(t.pole, j);
  return sum;
}

Real SpectralDecomposition::weight_sum() const { return power_sum(0); }

SpectralDecomposition residues(Level k, std::uint32_t i, Bits bits) {
  return SpectralDecomposition(k, i, bits);
}

Count count_spectral(const Query& q, const PrecisionPolicy& policy) {
  policy.validate();
  if (q.i > q.k) return 0;
  // D_k(i,j) <= 2^j; the extra 32 bits absorb cancellation between terms.
  Bits bits = std::max<Bits>(policy.initial_bits, static_cast<Bits>(q.j) + 32);
  std::optional<Integer> previous;
  double residual = 1.0;
  for (; bits <= policy.max_bits; bits *= 2) {
    const Real value = SpectralDecomposition(q.k, q.i, bits).power_sum(q.j);
    Integer nearest = value.round();
    residual = abs(value - Real(nearest, bits)).to_double();
    if (residual >= policy.accept_distance || nearest < 0) {
      previous.reset();
      continue;
    }
    if (previous && *previous == nearest) return nearest;
    previous = std::move(nearest);
  }
  throw PrecisionExhausted("spectral evaluation of " + to_string(q) +
                               " did not settle on an integer by " +
                               std::to_string(policy.max_bits) + " bits",
                           residual);
}

Real growth_rate(Level k, Bits bits) {
  return cos(Real::pi(bits) / (static_cast<long>(k) + 2)) * 2L;
}

Real empirical_rate(Level k, std::uint32_t i, std::uint32_t jmax, Bits bits) {
  if (jmax < 2) throw DomainError("empirical rate needs jmax >= 2");
  const Count hi = count_dp({k, i, jmax});
  const Count lo = count_dp({k, i, jmax - 2});
  if (hi == 0 || lo == 0)
    throw DomainError("D_" + std::to_string(k) + "(" + std::to_string(i) + ", " +
                      std::to_string(jmax) + ") or its predecessor two steps back is 0");
  return sqrt(Real(hi, bits) / Real(lo, bits));
}

}  // namespace bratteli
