#pragma once

#include <string>

#include <mpfr.h>

#include "bratteli/count.hpp"
#include "bratteli/poly.hpp"

namespace bratteli {

using Bits = mpfr_prec_t;

/// Owning MPFR value with an explicit precision. Binary operations round to
/// the larger precision of their operands; all rounding is to nearest.
class Real {
 public:
  explicit Real(Bits bits);
  Real(double v, Bits bits);
  Real(long v, Bits bits);
  Real(const Integer& v, Bits bits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real pi(Bits bits);

  Bits precision() const noexcept { return mpfr_get_prec(v_); }

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Nearest integer (ties away from zero).
  Integer round() const;

  /// Scientific rendering with `digits` significant digits, trailing zeros
  /// kept, e.g. "1.618033989" for digits = 10.
  std::string str(int digits) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real pow(const Real& x, unsigned long n);

/// Evaluates p at x by Horner's rule in x's precision.
Real evaluate(const IntPoly& p, const Real& x);

/// Largest precision representable as a count of decimal digits in `bits`.
int decimal_digits(Bits bits) noexcept;

}  // namespace bratteli
