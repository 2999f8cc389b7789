#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sharpbound {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that violate an operation's documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Enumeration requests above the configured hard cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// Malformed instance documents. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace sharpbound
