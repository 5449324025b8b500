#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. `line`/`column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(decorate(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
  std::size_t line_;
  std::size_t column_;
};

// Well-formed text that violates a position schema or type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InfeasibleMove : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes_expanded)
      : Error(what), nodes_expanded_(nodes_expanded) {}
  std::uint64_t nodes_expanded() const { return nodes_expanded_; }

 private:
  std::uint64_t nodes_expanded_;
};

class InapplicableTransformer : public Error {
 public:
  using Error::Error;
};

}  // namespace twave
