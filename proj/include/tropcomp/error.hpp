#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropcomp {

/// Raised on ill-formed arguments: dimension mismatch, malformed input, etc.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by connectivity queries on an empty prevariety.
class EmptyPrevariety : public std::runtime_error {
 public:
  EmptyPrevariety() : std::runtime_error("prevariety is empty") {}
};

/// Text-format error carrying a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropcomp
