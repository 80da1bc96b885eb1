#pragma once

#include <stdexcept>
#include <string>

namespace flagcx {

// Malformed user input (theta lists, rationals, block specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A mathematical invariant does not hold (a^2 != xy - 1, J^2 != -I, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request outside the supported scope (non-GM2 flag, odd class, ...).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagcx
