#include "dgrover/boolean_function.hpp"

#include <sstream>

#include "dgrover/errors.hpp"

namespace dgrover {

namespace {

void check_arity(int arity) {
  if (arity < 1) throw argument_error("arity must be at least 1");
  if (arity > kMaxArity) {
    throw capacity_error("arity " + std::to_string(arity) + " exceeds the limit of " +
                         std::to_string(kMaxArity));
  }
}

}  // namespace

BooleanFunction BooleanFunction::from_truth_table(std::vector<bool> values, std::string label) {
  const std::size_t size = values.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw argument_error("truth table length must be 2^n with n >= 1");
  }
  int arity = 0;
  while ((std::size_t{1} << arity) < size) ++arity;
  check_arity(arity);
  return BooleanFunction(arity, std::make_shared<const Backend>(TruthTable{std::move(values)}),
                         std::move(label));
}

BooleanFunction BooleanFunction::from_truth_table(std::string_view bits, std::string label) {
  std::vector<bool> values;
  values.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw argument_error("truth table must contain only 0 and 1");
    values.push_back(c == '1');
  }
  return from_truth_table(std::move(values), std::move(label));
}

BooleanFunction BooleanFunction::constant(int arity, bool value) {
  check_arity(arity);
  return BooleanFunction(arity, std::make_shared<const Backend>(Constant{value}),
                         value ? "const1" : "const0");
}

BooleanFunction BooleanFunction::from_cnf(CnfFormula formula, std::string label) {
  check_arity(formula.variable_count);
  const int arity = formula.variable_count;
  return BooleanFunction(arity, std::make_shared<const Backend>(Cnf{std::move(formula)}),
                         std::move(label));
}

BooleanFunction BooleanFunction::from_circuit(CircuitIR circuit, std::string label) {
  check_arity(circuit.input_qubits);
  const int arity = circuit.input_qubits;
  return BooleanFunction(arity, std::make_shared<const Backend>(Compiled{std::move(circuit)}),
                         std::move(label));
}

bool BooleanFunction::value_at(std::uint64_t x) const {
  if (x >> arity_) throw argument_error("input index outside the function's domain");
  return std::visit(
      [x](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, TruthTable>) {
          return b.values[x];
        } else if constexpr (std::is_same_v<T, Constant>) {
          return b.value;
        } else if constexpr (std::is_same_v<T, Cnf>) {
          return b.formula.evaluate(x);
        } else {
          return simulate_oracle_circuit(b.circuit, x).phase < 0;
        }
      },
      *backend_);
}

bool BooleanFunction::evaluate(std::uint64_t x, QueryLedger& ledger, std::string_view phase) const {
  const bool value = value_at(x);
  ledger.charge_classical(phase);
  return value;
}

bool BooleanFunction::evaluate(std::string_view bits, QueryLedger& ledger, std::string_view phase) const {
  if (bits.size() != static_cast<std::size_t>(arity_)) {
    throw argument_error("input has " + std::to_string(bits.size()) + " bits, function arity is " +
                         std::to_string(arity_));
  }
  return evaluate(from_bit_string(bits), ledger, phase);
}

void BooleanFunction::apply_phase(std::span<amplitude> block) const {
  if (block.size() != (std::size_t{1} << arity_)) {
    throw argument_error("phase oracle block size does not match arity");
  }
  std::visit(
      [block](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, TruthTable>) {
          for (std::size_t x = 0; x < block.size(); ++x) {
            if (b.values[x]) block[x] = -block[x];
          }
        } else if constexpr (std::is_same_v<T, Constant>) {
          if (b.value) {
            for (auto& a : block) a = -a;
          }
        } else if constexpr (std::is_same_v<T, Cnf>) {
          for (std::size_t x = 0; x < block.size(); ++x) {
            if (b.formula.evaluate(x)) block[x] = -block[x];
          }
        } else {
          apply_oracle_circuit(b.circuit, block);
        }
      },
      *backend_);
}

std::vector<bool> BooleanFunction::to_truth_table() const {
  if (const auto* table = std::get_if<TruthTable>(backend_.get())) return table->values;
  std::vector<bool> values(std::size_t{1} << arity_);
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = value_at(x);
  return values;
}

std::uint64_t solution_count(const BooleanFunction& f) {
  if (const auto* c = std::get_if<BooleanFunction::Constant>(&f.backend())) {
    return c->value ? (std::uint64_t{1} << f.arity()) : 0;
  }
  std::uint64_t count = 0;
  const std::uint64_t size = std::uint64_t{1} << f.arity();
  for (std::uint64_t x = 0; x < size; ++x) count += f.value_at(x) ? 1 : 0;
  return count;
}

void apply_phase_oracle(const BooleanFunction& f, StateVector& state, QubitRange reg,
                        QueryLedger& ledger, std::string_view phase) {
  if (reg.count != f.arity()) {
    throw argument_error("register width " + std::to_string(reg.count) + " does not match arity " +
                         std::to_string(f.arity()));
  }
  state.apply_register_transform(reg, [&f](std::span<amplitude> block) { f.apply_phase(block); });
  ledger.charge_quantum(phase);
}

void apply_zero_reflection(StateVector& state, QubitRange reg) {
  state.apply_diagonal_phase(reg, [](std::uint64_t x) { return x == 0 ? -1 : 1; });
}

BooleanFunction restrict(const BooleanFunction& f, int suffix_bits, std::uint64_t suffix) {
  const int n = f.arity();
  if (suffix_bits < 1 || suffix_bits >= n) {
    throw argument_error("suffix length must satisfy 1 <= k < n (k=" + std::to_string(suffix_bits) +
                         ", n=" + std::to_string(n) + ")");
  }
  if (suffix >> suffix_bits) throw argument_error("suffix value has more than k bits");
  const int kept = n - suffix_bits;
  const std::string label = f.label() + "|" + to_bit_string(suffix, suffix_bits);

  auto from_formula = [&](const CnfFormula& restricted, bool compiled) {
    if (restricted.is_constant_false()) return BooleanFunction::constant(kept, false);
    if (restricted.is_constant_true()) return BooleanFunction::constant(kept, true);
    if (compiled) return BooleanFunction::from_circuit(compile_phase_oracle(restricted), label);
    return BooleanFunction::from_cnf(restricted, label);
  };

  return std::visit(
      [&](const auto& b) -> BooleanFunction {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BooleanFunction::TruthTable>) {
          std::vector<bool> values(std::size_t{1} << kept);
          for (std::size_t x = 0; x < values.size(); ++x) values[x] = b.values[(x << suffix_bits) | suffix];
          return BooleanFunction::from_truth_table(std::move(values), label);
        } else if constexpr (std::is_same_v<T, BooleanFunction::Constant>) {
          return BooleanFunction::constant(kept, b.value);
        } else if constexpr (std::is_same_v<T, BooleanFunction::Cnf>) {
          return from_formula(restrict_cnf(b.formula, suffix_bits, suffix), false);
        } else {
          return from_formula(restrict_cnf(b.circuit.source, suffix_bits, suffix), true);
        }
      },
      f.backend());
}

BooleanFunction parse_truth_table(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string first;
  std::string second;
  if (!std::getline(in, first)) throw parse_error(1, "missing arity line");
  if (!first.empty() && first.back() == '\r') first.pop_back();
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(first, &used);
    if (used != first.size()) throw std::invalid_argument(first);
  } catch (const std::exception&) {
    throw parse_error(1, "arity line must be an integer");
  }
  if (n < 1) throw parse_error(1, "arity must be at least 1");
  if (n > kMaxArity) throw capacity_error("truth table arity " + std::to_string(n) + " exceeds limit");
  if (!std::getline(in, second)) throw parse_error(2, "missing truth table line");
  if (!second.empty() && second.back() == '\r') second.pop_back();
  if (second.size() != (std::size_t{1} << n)) {
    throw parse_error(2, "expected " + std::to_string(std::size_t{1} << n) + " values, found " +
                             std::to_string(second.size()));
  }
  for (char c : second) {
    if (c != '0' && c != '1') throw parse_error(2, "truth table must contain only 0 and 1");
  }
  return BooleanFunction::from_truth_table(std::string_view(second), std::move(label));
}

std::string to_bit_string(std::uint64_t value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::uint64_t from_bit_string(std::string_view bits) {
  if (bits.size() > 64) throw argument_error("bit string longer than 64 bits");
  std::uint64_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw argument_error("bit string must contain only 0 and 1");
    x = (x << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return x;
}

}  // namespace dgrover
