#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dgrover/cnf.hpp"
#include "dgrover/oracle_circuit.hpp"
#include "dgrover/query_ledger.hpp"
#include "dgrover/statevector.hpp"

namespace dgrover {

// Functions of more inputs than this cannot be counted or tabulated.
inline constexpr int kMaxArity = 26;

// f : {0,1}^n -> {0,1}. Input index x has x_1 as its most significant bit.
// Values are immutable; copies share the backend.
class BooleanFunction {
 public:
  struct TruthTable {
    std::vector<bool> values;
  };
  struct Constant {
    bool value = false;
  };
  struct Cnf {
    CnfFormula formula;
  };
  struct Compiled {
    CircuitIR circuit;
  };
  using Backend = std::variant<TruthTable, Constant, Cnf, Compiled>;

  static BooleanFunction from_truth_table(std::vector<bool> values, std::string label = "table");
  // '0'/'1' characters in ascending index order.
  static BooleanFunction from_truth_table(std::string_view bits, std::string label = "table");
  static BooleanFunction constant(int arity, bool value);
  static BooleanFunction from_cnf(CnfFormula formula, std::string label = "cnf");
  // Backend that applies the phase oracle by executing the compiled circuit.
  static BooleanFunction from_circuit(CircuitIR circuit, std::string label = "compiled");
  // Truth table from a predicate over all 2^arity inputs.
  template <class Predicate>
  static BooleanFunction tabulate(int arity, Predicate&& predicate, std::string label = "table");

  int arity() const noexcept { return arity_; }
  const std::string& label() const noexcept { return label_; }
  const Backend& backend() const noexcept { return *backend_; }

  // f(x) without charging a ledger; for simulation kernels and test harnesses.
  bool value_at(std::uint64_t x) const;

  // Classical query: f(x), charging one classical query.
  bool evaluate(std::uint64_t x, QueryLedger& ledger, std::string_view phase = phase::verify) const;
  // Bit-string form (x_1 first). Throws argument_error on a length mismatch.
  bool evaluate(std::string_view bits, QueryLedger& ledger, std::string_view phase = phase::verify) const;

  // (-1)^{f(x)} on a dense 2^n block, no ledger charge.
  void apply_phase(std::span<amplitude> block) const;

  // All 2^n values; throws capacity_error above kMaxArity.
  std::vector<bool> to_truth_table() const;

 private:
  BooleanFunction(int arity, std::shared_ptr<const Backend> backend, std::string label)
      : arity_(arity), backend_(std::move(backend)), label_(std::move(label)) {}

  int arity_;
  std::shared_ptr<const Backend> backend_;
  std::string label_;
};

template <class Predicate>
BooleanFunction BooleanFunction::tabulate(int arity, Predicate&& predicate, std::string label) {
  if (arity < 1 || arity > kMaxArity) throw argument_error("arity out of range");
  std::vector<bool> values(std::size_t{1} << arity);
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = static_cast<bool>(predicate(std::uint64_t{x}));
  return from_truth_table(std::move(values), std::move(label));
}

// Exact |{x : f(x) = 1}| by exhaustion. Harness-only: never charged.
std::uint64_t solution_count(const BooleanFunction& f);

// Z_f on `reg` (width must equal arity); one quantum query.
void apply_phase_oracle(const BooleanFunction& f, StateVector& state, QubitRange reg,
                        QueryLedger& ledger, std::string_view phase = phase::oracle);

// Z_0 = I - 2|0><0| on `reg`.
void apply_zero_reflection(StateVector& state, QubitRange reg);

// f_y(x) = f(x || y): the low `suffix_bits` input bits are fixed to `suffix`.
// CNF and compiled backends are restricted symbolically so the result stays
// circuit-compilable.
BooleanFunction restrict(const BooleanFunction& f, int suffix_bits, std::uint64_t suffix);

// Text format: first line n, second line 2^n characters of 0/1.
BooleanFunction parse_truth_table(std::string_view text, std::string label = "table");

// Renders an n-bit index as a bit string, most significant first.
std::string to_bit_string(std::uint64_t value, int width);

// Parses a bit string, most significant first. Throws argument_error.
std::uint64_t from_bit_string(std::string_view bits);

}  // namespace dgrover
