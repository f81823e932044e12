#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/count.hpp"

namespace bratteli {

/// Dense univariate polynomial with integer coefficients in ascending degree.
/// Always canonical: no trailing zeros, the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Integer c);
  /// c * x^n
  static IntPoly monomial(Integer c, std::size_t n);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^n; 0 beyond the degree.
  Integer operator[](std::size_t n) const;
  const Integer& leading() const { return coeffs_.back(); }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& p);

  /// x^n * p
  IntPoly shifted(std::size_t n) const;
  /// p(x^2)
  IntPoly substitute_square() const;
  /// q with p(x) = x^parity * q(x^2), or DomainError if p mixes parities.
  IntPoly compress_square(unsigned parity) const;
  /// True when every nonzero coefficient sits at an exponent of this parity.
  bool has_parity(unsigned parity) const noexcept;

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  /// p / content(p) with a positive leading coefficient.
  IntPoly primitive_part() const;
  /// Exact division by an integer; throws DomainError if inexact.
  IntPoly divide_exact(const Integer& c) const;

  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }
  double evaluate(double x) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Space-separated ascending coefficients; "0" for the zero polynomial.
  std::string str() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// Exact quotient a / b over the integers; DomainError if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// gcd over Z[x]: gcd of the contents times the primitive-part Euclidean gcd,
/// with a positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace bratteli
