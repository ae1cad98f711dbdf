#pragma once

#include <stdexcept>
#include <string>

namespace diamaug {

/// An input violates an operation's precondition (bad vertex, non-edge,
/// disconnected graph where a connected one is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list text.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The brute-force oracle refused an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object failed its own verification. Signals a bug or a case
/// the underlying argument does not cover; never swallowed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace diamaug
