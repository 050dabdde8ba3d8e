#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ualg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside the theory's hypotheses (for example a
/// commutator on an algebra whose congruence lattice is not modular).
class Refusal : public Error {
 public:
  using Error::Error;
};

/// A universe would exceed the configured size limit.
class SizeLimitExceeded : public Refusal {
 public:
  SizeLimitExceeded(std::size_t required, std::size_t limit)
      : Refusal("universe of " + std::to_string(required) +
                " elements exceeds the size limit " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

/// A postcondition that the theory guarantees failed. Either the code is wrong
/// or the input broke an unchecked precondition.
class Falsification : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ualg
