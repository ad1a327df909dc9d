#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncalg {

/// Malformed user input: bad files, unknown names, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in an expression or file. `position` is a 0-based character
/// offset into the text that was being parsed; line/column are 1-based and
/// zero when unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0, std::size_t column = 0)
      : InputError(message), position_(position), line_(line), column_(column) {}
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// A denominator vanished when evaluating at a point.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A pair, rule or step budget ran out before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncalg
