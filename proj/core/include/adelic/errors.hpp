#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adelic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different residue rings, or a prime modulus was required.
class ModulusError : public Error {
 public:
  using Error::Error;
};

/// Division by a polynomial whose leading coefficient is not invertible.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition of the called operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; line 0 means no
/// position is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(line == 0 ? message
                        : message + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column)),
        message_(message),
        line_(line),
        column_(column) {}

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// p-adic working precision was too small to certify a valuation.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (ring order, index set, quantifier depth) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A computation needed a prime decomposition that could not be resolved.
class UnresolvedPrime : public Error {
 public:
  using Error::Error;
};

}  // namespace adelic
