#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropenum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed user input; carries the 1-based line when known.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DuplicateTerm : public Error {
 public:
  using Error::Error;
};

class EmptySupport : public Error {
 public:
  EmptySupport() : Error("polynomial has no terms") {}
};

class DegenerateSupport : public Error {
 public:
  using Error::Error;
};

class NotStandardForm : public Error {
 public:
  using Error::Error;
};

class Imbalanced : public Error {
 public:
  using Error::Error;
};

class NotTrivalent : public Error {
 public:
  using Error::Error;
};

class NotSimple : public Error {
 public:
  using Error::Error;
};

class BadDegree : public Error {
 public:
  explicit BadDegree(long long d)
      : Error("degree must be at least 1, got " + std::to_string(d)) {}
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class NegativeN : public Error {
 public:
  using Error::Error;
};

class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyTable : public Error {
 public:
  EmptyTable() : Error("invariant table is empty") {}
};

/// Overflow of a fixed-width intermediate in the path recursion.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace tropenum
