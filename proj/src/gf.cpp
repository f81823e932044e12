#include "bratteli/gf.hpp"

#include <algorithm>

#include "bratteli/errors.hpp"

namespace bratteli {

RationalGF::RationalGF(IntPoly num, IntPoly den) {
  if (den[0] == 0)
    throw DomainError("generating function denominator " + den.str() +
                      " vanishes at 0");
  if (num.is_zero()) {
    den = IntPoly{1};
  } else {
    const IntPoly g = gcd(num, den);
    if (g.degree() > 0 || g[0] != 1) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  if (den[0] < 0) {
    num = -num;
    den = -den;
  }
  if (den[0] != 1)
    throw DomainError("denominator " + den.str() + " cannot be normalized to constant term 1");
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalGF RationalGF::reciprocal() const { return RationalGF(den_, num_); }

RationalGF RationalGF::shifted(std::size_t n) const {
  return RationalGF(num_.shifted(n), den_);
}

RationalGF RationalGF::substitute_square() const {
  return RationalGF(num_.substitute_square(), den_.substitute_square());
}

std::vector<Integer> LinearRecurrence::replay(std::size_t n) const {
  std::vector<Integer> out(initial.begin(), initial.begin() + static_cast<std::ptrdiff_t>(
                                                                 std::min(n + 1, initial.size())));
  for (std::size_t m = out.size(); m <= n; ++m) {
    Integer v = 0;
    for (std::size_t t = 1; t <= order && t <= m; ++t) v += coeffs[t - 1] * out[m - t];
    out.push_back(std::move(v));
  }
  return out;
}

IntPoly chebyshev_u(std::size_t r) {
  IntPoly prev{1};
  if (r == 0) return prev;
  IntPoly cur{0, 2};
  const IntPoly two_x{0, 2};
  for (std::size_t n = 1; n < r; ++n) {
    IntPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly u_hat_sqrt(long m) {
  if (m < 0) return {};
  std::vector<Integer> v;
  for (long t = 0; 2 * t <= m; ++t) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m - t), static_cast<unsigned long>(t));
    v.push_back((t & 1) ? Integer(-b) : b);
  }
  return IntPoly(std::move(v));
}

IntPoly u_hat(std::size_t m) { return u_hat_sqrt(static_cast<long>(m)).substitute_square(); }

RationalGF r_k(Level k) {
  return RationalGF(u_hat_sqrt(static_cast<long>(k) - 1), u_hat_sqrt(static_cast<long>(k)));
}

namespace {

void require_height(Level k, std::uint32_t i) {
  if (i > k)
    throw DomainError("height i=" + std::to_string(i) + " exceeds level k=" + std::to_string(k));
}

}  // namespace

RationalGF gf_product(Level k, std::uint32_t i) {
  require_height(k, i);
  RationalGF g = r_k(k + 1).substitute_square();
  for (std::uint32_t r = 1; r <= i; ++r) g = g * r_k(k + 1 - r).substitute_square().shifted(1);
  return g;
}

RationalGF gf_closed(Level k, std::uint32_t i) {
  require_height(k, i);
  return RationalGF(u_hat(k - i).shifted(i), u_hat(std::size_t{k} + 1));
}

std::vector<Integer> series_coeffs(const RationalGF& g, std::size_t n, Expansion mode) {
  const auto& num = g.num().coeffs();
  const auto& den = g.den().coeffs();
  std::vector<Integer> c(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Integer v = m < num.size() ? num[m] : Integer(0);
    for (std::size_t t = 1; t < den.size() && t <= m; ++t) v -= den[t] * c[m - t];
    if (mode == Expansion::Counting && v < 0)
      throw IntegralityError("series coefficient " + std::to_string(m) + " is negative (" +
                             v.get_str() + ")");
    c[m] = std::move(v);
  }
  return c;
}

Count count_gf(const Query& q) {
  if (q.i > q.k) return 0;
  return series_coeffs(gf_closed(q.k, q.i), q.j).back();
}

LinearRecurrence recurrence_from_gf(const RationalGF& g) {
  LinearRecurrence rec;
  const IntPoly& den = g.den();
  rec.order = static_cast<std::size_t>(std::max(0L, den.degree()));
  for (std::size_t t = 1; t <= rec.order; ++t) rec.coeffs.push_back(-den[t]);
  const std::size_t lead = std::max<std::size_t>(
      rec.order, static_cast<std::size_t>(std::max(0L, g.num().degree() + 1)));
  if (lead > 0) rec.initial = series_coeffs(g, lead - 1, Expansion::Signed);
  return rec;
}

EvenForm even_form(const RationalGF& g) {
  const unsigned shift = g.num().has_parity(0) ? 0U : 1U;
  if (!g.den().has_parity(0) || !g.num().has_parity(shift))
    throw DomainError("generating function is not of the form x^s h(x^2)");
  return EvenForm{shift, RationalGF(g.num().compress_square(shift), g.den().compress_square(0))};
}

}  // namespace bratteli
