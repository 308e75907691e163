#pragma once

#include <stdexcept>
#include <string>

namespace cpsat {

/// A caller broke a documented precondition or invariant (wrong modulus,
/// index out of range, malformed configuration, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Zero has no multiplicative inverse modulo p.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Marker values 0 and 1 (or equal markers) cannot drive the elimination.
class InvalidMarker : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two reduced equations disagree on the determined aggregate. This
/// signals an internal fault in the elimination, never bad input.
class InconsistentSystem : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A dense-representation request exceeded the configured variable cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed DIMACS (or other textual) input, tagged with the 1-based line
/// the problem was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cpsat
