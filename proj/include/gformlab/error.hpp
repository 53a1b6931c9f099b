#pragma once

#include <stdexcept>
#include <string>

namespace gformlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad group spec, wild
/// conductor, non-unit residue, even order where odd is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, cyclotomic level) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Division by zero in an exact field.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gformlab
