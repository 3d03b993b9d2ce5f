#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapspec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad size, index, empty input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

/// An exact division that must be exact was not. For valid inputs this is
/// mathematically impossible, so it signals a bug or a violated precondition.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused a graph that exceeds its enumeration bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lapspec
