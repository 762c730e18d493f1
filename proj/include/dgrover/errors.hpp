#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgrover {

// Bad arguments: out-of-range indices, width mismatches, invalid parameters.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested simulation exceeds the amplitude capacity.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed DIMACS or truth-table input. Carries the 1-based line number
// (0 when the error is not tied to a line, e.g. a clause-count mismatch).
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An internal consistency check failed (e.g. an oracle circuit left its
// counter register dirty). Indicates a bug, never bad input.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Constant-false formulas cannot be compiled into a counter circuit.
class constant_formula_error : public argument_error {
 public:
  using argument_error::argument_error;
};

}  // namespace dgrover
