#include "bratteli/poly.hpp"

#include <algorithm>

#include "bratteli/errors.hpp"

namespace bratteli {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[n] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : Integer(0);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t n = 0; n < o.coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t s = 0; s < a.coeffs_.size(); ++s) {
    if (a.coeffs_[s] == 0) continue;
    for (std::size_t t = 0; t < b.coeffs_.size(); ++t) out[s + t] += a.coeffs_[s] * b.coeffs_[t];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& c, const IntPoly& p) {
  if (c == 0) return {};
  IntPoly r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

IntPoly IntPoly::shifted(std::size_t n) const {
  if (is_zero()) return {};
  std::vector<Integer> v(n);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::substitute_square() const {
  if (is_zero()) return {};
  std::vector<Integer> v(2 * coeffs_.size() - 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) v[2 * n] = coeffs_[n];
  return IntPoly(std::move(v));
}

bool IntPoly::has_parity(unsigned parity) const noexcept {
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if ((n & 1U) != (parity & 1U) && coeffs_[n] != 0) return false;
  return true;
}

IntPoly IntPoly::compress_square(unsigned parity) const {
  if (!has_parity(parity))
    throw DomainError("polynomial " + str() + " is not of the form x^" +
                      std::to_string(parity & 1U) + " q(x^2)");
  std::vector<Integer> v;
  for (std::size_t n = parity & 1U; n < coeffs_.size(); n += 2) v.push_back(coeffs_[n]);
  return IntPoly(std::move(v));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return divide_exact(c);
}

IntPoly IntPoly::divide_exact(const Integer& c) const {
  if (c == 0) throw DomainError("division of a polynomial by zero");
  IntPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw DomainError("inexact division of " + str() + " by " + c.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

double IntPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n) out += ' ';
    out += coeffs_[n].get_str();
  }
  return out;
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(rem.size() - db);
  // Classic pseudo-division: scale the remainder by lc(b) at every step.
  for (std::size_t top = rem.size(); top-- > db;) {
    for (auto& q : quo) q *= lb;
    const Integer lead = rem[top];
    for (std::size_t n = 0; n <= top; ++n) rem[n] *= lb;
    quo[top - db] += lead;
    for (std::size_t n = 0; n <= db; ++n) rem[top - db + n] -= lead * b.coeffs()[n];
  }
  rem.resize(db);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(rem.size() - db);
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top] == 0) continue;
    if (!mpz_divisible_p(rem[top].get_mpz_t(), lb.get_mpz_t()))
      throw DomainError("inexact polynomial division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[top].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t n = 0; n <= db; ++n) rem[top - db + n] -= q * b.coeffs()[n];
    quo[top - db] = std::move(q);
  }
  if (!IntPoly(std::move(rem)).is_zero()) throw DomainError("inexact polynomial division");
  return IntPoly(std::move(quo));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Integer c;
  const Integer ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly p = a.primitive_part(), q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPoly r = pseudo_divmod(p, q).second.primitive_part();
    p = std::move(q);
    q = std::move(r);
  }
  return c * p.primitive_part();
}

}  // namespace bratteli
