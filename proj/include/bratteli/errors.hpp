#pragma once

#include <stdexcept>
#include <string>

namespace bratteli {

/// Base class for every error raised by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. i > k for a
/// generating function, an unreachable vertex for degrees()).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration explored more nodes than its budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Materializing a result would exceed a configured size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A counting series produced a negative coefficient.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Adaptive-precision evaluation never settled on an integer.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Distance to the nearest integer at the final precision tried.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace bratteli
