#pragma once

#include <stdexcept>
#include <string>

namespace semiprimary {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation received an argument outside its domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A truncated series does not carry enough coefficients to answer a query.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace semiprimary
