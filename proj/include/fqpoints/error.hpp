#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different fields or rings") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A desk-scale cap (field size, exponent width, enumeration budget) was hit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Text input did not match the polynomial grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// The Hilbert polynomial of a monomial ideal is not constant.
class PositiveDimension : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug, never user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fqp
