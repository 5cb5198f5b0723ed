#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A documented precondition of an operation does not hold (not a cycle,
/// degree out of range, cover does not cover, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or iteration cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellone
