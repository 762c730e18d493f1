#include "dgrover/oracle_circuit.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "dgrover/elementary.hpp"
#include "dgrover/errors.hpp"

namespace dgrover {

std::vector<Gate> CircuitIR::flat_gates() const {
  std::vector<Gate> out;
  for (const auto& block : blocks) out.insert(out.end(), block.gates.begin(), block.gates.end());
  return out;
}

int counter_width(int clause_count) {
  if (clause_count < 1) throw argument_error("counter width needs at least one clause");
  return std::bit_width(static_cast<unsigned>(clause_count));
}

CounterPermutation build_add(int modulus, int width) {
  if (modulus < 2) throw argument_error("modulus must be at least 2");
  if (width < 1 || width > 30 || (std::uint64_t{1} << width) < static_cast<std::uint64_t>(modulus)) {
    throw argument_error("counter width " + std::to_string(width) + " too small for modulus " +
                         std::to_string(modulus));
  }
  CounterPermutation perm{modulus, width, {}};
  perm.image.resize(std::size_t{1} << width);
  for (std::uint32_t c = 0; c < perm.image.size(); ++c) {
    perm.image[c] = c < static_cast<std::uint32_t>(modulus) ? (c + 1) % modulus : c;
  }
  return perm;
}

CounterPermutation build_sub(int modulus, int width) {
  CounterPermutation add = build_add(modulus, width);
  CounterPermutation sub{modulus, width, std::vector<std::uint32_t>(add.image.size())};
  for (std::uint32_t c = 0; c < add.image.size(); ++c) sub.image[add.image[c]] = c;
  return sub;
}

namespace {

GateBlock clause_block(const Clause& clause, int clause_index, int modulus, int width, bool add) {
  if (clause.empty()) throw argument_error("cannot build a block for an empty clause");
  build_add(modulus, width);  // validates modulus/width
  GateBlock block;
  block.role = add ? BlockRole::compute : BlockRole::uncompute;
  block.clause_index = clause_index;

  std::vector<Gate> flips;
  Gate counter_gate;
  counter_gate.kind = add ? GateKind::controlled_add : GateKind::controlled_sub;
  counter_gate.modulus = modulus;
  for (Literal lit : clause) {
    const int qubit = std::abs(lit) - 1;
    // A clause is false when every positive literal's variable is 0 and every
    // negative literal's variable is 1; flipping the positive ones makes that
    // pattern all-ones.
    if (lit > 0) flips.push_back(Gate{GateKind::pauli_x, qubit, {}, 0});
    counter_gate.controls.push_back(Control{qubit, true});
  }
  block.gates = flips;
  block.gates.push_back(std::move(counter_gate));
  block.gates.insert(block.gates.end(), flips.rbegin(), flips.rend());
  return block;
}

bool controls_match(const std::vector<Control>& controls, int n, std::uint64_t input) {
  for (const auto& c : controls) {
    const bool bit = ((input >> (n - 1 - c.qubit)) & 1U) != 0;
    if (bit != c.positive) return false;
  }
  return true;
}

std::string control_list(const std::vector<Control>& controls) {
  std::string out = "[";
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (i) out += ",";
    out += (controls[i].positive ? "q" : "-q") + std::to_string(controls[i].qubit);
  }
  return out + "]";
}

}  // namespace

GateBlock build_uk(const Clause& clause, int clause_index, int modulus, int width) {
  return clause_block(clause, clause_index, modulus, width, true);
}

GateBlock build_uk_prime(const Clause& clause, int clause_index, int modulus, int width) {
  return clause_block(clause, clause_index, modulus, width, false);
}

CircuitIR compile_phase_oracle(const CnfFormula& formula) {
  if (formula.is_constant_false()) {
    throw constant_formula_error("formula is constant false; use a constant oracle instead");
  }
  if (formula.clauses.empty()) {
    throw argument_error("formula has no clauses; use a constant oracle instead");
  }
  CircuitIR circuit;
  circuit.input_qubits = formula.variable_count;
  circuit.clause_count = formula.clause_count();
  circuit.counter_qubits = counter_width(circuit.clause_count);
  circuit.source = formula;

  const int modulus = circuit.modulus();
  const int width = circuit.counter_qubits;
  for (int k = 0; k < circuit.clause_count; ++k) {
    circuit.blocks.push_back(build_uk(formula.clauses[k], k, modulus, width));
  }
  GateBlock phase_block;
  phase_block.role = BlockRole::phase;
  phase_block.gates.push_back(Gate{GateKind::zero_phase_on_counter, -1, {}, 0});
  circuit.blocks.push_back(std::move(phase_block));
  for (int k = circuit.clause_count - 1; k >= 0; --k) {
    circuit.blocks.push_back(build_uk_prime(formula.clauses[k], k, modulus, width));
  }
  return circuit;
}

bool is_palindromic(const CircuitIR& circuit) {
  const auto& blocks = circuit.blocks;
  if (blocks.size() % 2 == 0) return false;
  const std::size_t mid = blocks.size() / 2;
  if (blocks[mid].role != BlockRole::phase) return false;
  std::vector<Gate> left;
  std::vector<Gate> right;
  for (std::size_t i = 0; i < mid; ++i) {
    if (blocks[i].role != BlockRole::compute) return false;
    if (blocks[blocks.size() - 1 - i].role != BlockRole::uncompute) return false;
    if (blocks[i].clause_index != blocks[blocks.size() - 1 - i].clause_index) return false;
    left.insert(left.end(), blocks[i].gates.begin(), blocks[i].gates.end());
  }
  for (std::size_t i = mid + 1; i < blocks.size(); ++i) {
    right.insert(right.end(), blocks[i].gates.begin(), blocks[i].gates.end());
  }
  if (left.size() != right.size()) return false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    Gate mirrored = right[right.size() - 1 - i];
    if (mirrored.kind == GateKind::controlled_sub) {
      mirrored.kind = GateKind::controlled_add;
    } else if (mirrored.kind == GateKind::controlled_add) {
      return false;
    }
    if (!(mirrored == left[i])) return false;
  }
  return true;
}

OracleTrace simulate_oracle_circuit(const CircuitIR& circuit, std::uint64_t input) {
  const int n = circuit.input_qubits;
  if (input >> n) throw argument_error("input outside the circuit's input register");
  const CounterPermutation add = build_add(circuit.modulus(), circuit.counter_qubits);
  const CounterPermutation sub = build_sub(circuit.modulus(), circuit.counter_qubits);

  OracleTrace trace;
  std::uint64_t x = input;
  std::uint32_t counter = 0;
  for (const auto& gate : circuit.flat_gates()) {
    switch (gate.kind) {
      case GateKind::pauli_x:
        x ^= std::uint64_t{1} << (n - 1 - gate.target);
        break;
      case GateKind::controlled_add:
        if (controls_match(gate.controls, n, x)) counter = add(counter);
        break;
      case GateKind::controlled_sub:
        if (controls_match(gate.controls, n, x)) counter = sub(counter);
        break;
      case GateKind::zero_phase_on_counter:
        trace.counter_at_phase = static_cast<int>(counter);
        if (counter == 0) trace.phase = -trace.phase;
        break;
    }
    trace.peak_counter = std::max(trace.peak_counter, static_cast<int>(counter));
  }
  trace.ancilla_restored = counter == 0 && x == input;
  return trace;
}

OracleTrace simulate_oracle_circuit(const CircuitIR& circuit, std::string_view input_bits) {
  if (input_bits.size() != static_cast<std::size_t>(circuit.input_qubits)) {
    throw argument_error("input has " + std::to_string(input_bits.size()) + " bits, circuit expects " +
                         std::to_string(circuit.input_qubits));
  }
  std::uint64_t x = 0;
  for (char c : input_bits) {
    if (c != '0' && c != '1') throw argument_error("input must contain only 0 and 1");
    x = (x << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return simulate_oracle_circuit(circuit, x);
}

void apply_circuit(const CircuitIR& circuit, std::span<amplitude> joint) {
  const int n = circuit.input_qubits;
  const int width = circuit.counter_qubits;
  const std::size_t counter_dim = std::size_t{1} << width;
  const std::size_t input_dim = std::size_t{1} << n;
  if (joint.size() != input_dim * counter_dim) throw argument_error("joint state has the wrong size");

  const CounterPermutation add = build_add(circuit.modulus(), width);
  const CounterPermutation sub = build_sub(circuit.modulus(), width);
  std::vector<amplitude> scratch(counter_dim);

  for (const auto& gate : circuit.flat_gates()) {
    switch (gate.kind) {
      case GateKind::pauli_x: {
        const std::size_t bit = std::size_t{1} << (n - 1 - gate.target + width);
        for (std::size_t i = 0; i < joint.size(); ++i) {
          if (!(i & bit)) std::swap(joint[i], joint[i | bit]);
        }
        break;
      }
      case GateKind::controlled_add:
      case GateKind::controlled_sub: {
        const CounterPermutation& perm = gate.kind == GateKind::controlled_add ? add : sub;
        for (std::size_t x = 0; x < input_dim; ++x) {
          if (!controls_match(gate.controls, n, x)) continue;
          auto block = joint.subspan(x * counter_dim, counter_dim);
          for (std::size_t c = 0; c < counter_dim; ++c) scratch[perm.image[c]] = block[c];
          std::copy(scratch.begin(), scratch.end(), block.begin());
        }
        break;
      }
      case GateKind::zero_phase_on_counter:
        for (std::size_t x = 0; x < input_dim; ++x) joint[x * counter_dim] = -joint[x * counter_dim];
        break;
    }
  }
}

void apply_oracle_circuit(const CircuitIR& circuit, std::span<amplitude> input_block) {
  const std::size_t input_dim = std::size_t{1} << circuit.input_qubits;
  if (input_block.size() != input_dim) throw argument_error("input block has the wrong size");
  require_capacity(circuit.total_qubits(), "compiled oracle");
  const std::size_t counter_dim = std::size_t{1} << circuit.counter_qubits;
  std::vector<amplitude> joint(input_dim * counter_dim);
  for (std::size_t x = 0; x < input_dim; ++x) joint[x * counter_dim] = input_block[x];
  apply_circuit(circuit, joint);
  for (std::size_t x = 0; x < input_dim; ++x) {
    for (std::size_t c = 1; c < counter_dim; ++c) {
      if (joint[x * counter_dim + c] != amplitude{}) {
        throw invariant_error("oracle circuit left the counter register outside |0>");
      }
    }
    input_block[x] = joint[x * counter_dim];
  }
}

std::string to_text(const CircuitIR& circuit) {
  std::string out = "oracle n=" + std::to_string(circuit.input_qubits) +
                    " m=" + std::to_string(circuit.clause_count) +
                    " counter=" + std::to_string(circuit.counter_qubits) + "\n";
  for (const auto& gate : circuit.flat_gates()) {
    switch (gate.kind) {
      case GateKind::pauli_x:
        out += "X q" + std::to_string(gate.target) + "\n";
        break;
      case GateKind::controlled_add:
        out += "CADD mod=" + std::to_string(gate.modulus) + " ctrls=" + control_list(gate.controls) + "\n";
        break;
      case GateKind::controlled_sub:
        out += "CSUB mod=" + std::to_string(gate.modulus) + " ctrls=" + control_list(gate.controls) + "\n";
        break;
      case GateKind::zero_phase_on_counter:
        out += "Z0C width=" + std::to_string(circuit.counter_qubits) + "\n";
        break;
    }
  }
  return out;
}

std::size_t gate_count(const CircuitIR& circuit, bool elementary) {
  if (!elementary) return circuit.blocks.size();
  return expand_elementary(circuit).gates.size();
}

}  // namespace dgrover
