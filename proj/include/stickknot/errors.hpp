#pragma once

#include <stdexcept>
#include <string>

namespace stickknot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Four coplanar points, coincident points, or a segment touching a
/// triangle boundary.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded retry loop ran out of attempts.
class ExhaustionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed invariant leaves the closed world of <= 7 stick
/// knots. Only a bug can trigger it.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace stickknot
