#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgrover/cnf.hpp"
#include "dgrover/statevector.hpp"

namespace dgrover {

// Phase-oracle circuits for CNF formulas. A register of
// M = ceil(log2(m+1)) counter qubits accumulates the number of false clauses
// modulo m+1; the phase flips iff the counter is zero, and the counting is
// then undone:
//
//   U_1 ... U_m  Z0(counter)  U_m' ... U_1'
//
// U_k adds 1 (mod m+1) when clause k is false; U_k' subtracts 1.

struct Control {
  int qubit = 0;  // input qubit index (x_j is qubit j-1)
  bool positive = true;

  bool operator==(const Control&) const = default;
};

enum class GateKind { pauli_x, controlled_add, controlled_sub, zero_phase_on_counter };

struct Gate {
  GateKind kind = GateKind::pauli_x;
  int target = -1;                // pauli_x only
  std::vector<Control> controls;  // controlled_add / controlled_sub only
  int modulus = 0;                // controlled_add / controlled_sub only

  bool operator==(const Gate&) const = default;
};

enum class BlockRole { compute, phase, uncompute };

// One U_k, U_k' or the central Z0. clause_index is 0-based, -1 for Z0.
struct GateBlock {
  BlockRole role = BlockRole::compute;
  int clause_index = -1;
  std::vector<Gate> gates;

  bool operator==(const GateBlock&) const = default;
};

struct CircuitIR {
  int input_qubits = 0;
  int clause_count = 0;
  int counter_qubits = 0;
  std::vector<GateBlock> blocks;
  CnfFormula source;

  int modulus() const noexcept { return clause_count + 1; }
  int total_qubits() const noexcept { return input_qubits + counter_qubits; }
  std::vector<Gate> flat_gates() const;
};

// ceil(log2(m + 1)) for m >= 1.
int counter_width(int clause_count);

// Cyclic increment modulo `modulus` on counter values 0..modulus-1, identity
// on modulus..2^width-1.
struct CounterPermutation {
  int modulus = 0;
  int width = 0;
  std::vector<std::uint32_t> image;

  std::uint32_t operator()(std::uint32_t c) const { return image.at(c); }
};

CounterPermutation build_add(int modulus, int width);
CounterPermutation build_sub(int modulus, int width);

// X on the qubits of positive literals, an ADD controlled on all literal
// qubits, then the same X gates again: the counter advances exactly when the
// clause is false.
GateBlock build_uk(const Clause& clause, int clause_index, int modulus, int width);
GateBlock build_uk_prime(const Clause& clause, int clause_index, int modulus, int width);

// Throws constant_formula_error for constant-false formulas and
// argument_error for formulas without clauses.
CircuitIR compile_phase_oracle(const CnfFormula& formula);

// Checks the mirror structure: blocks read the same from both ends with
// compute/uncompute (ADD/SUB) swapped around the single Z0 block.
bool is_palindromic(const CircuitIR& circuit);

struct OracleTrace {
  int phase = 1;                 // +1 or -1
  bool ancilla_restored = false; // counter back to 0 and inputs unchanged
  int counter_at_phase = 0;      // counter value when Z0 acts
  int peak_counter = 0;          // largest counter value seen
};

// Propagates |input>|0>_C through the circuit gate by gate.
OracleTrace simulate_oracle_circuit(const CircuitIR& circuit, std::uint64_t input);
OracleTrace simulate_oracle_circuit(const CircuitIR& circuit, std::string_view input_bits);

// Executes the circuit on a joint input+counter state of 2^(n+M) amplitudes,
// counter qubits least significant.
void apply_circuit(const CircuitIR& circuit, std::span<amplitude> joint);

// Runs the circuit on a 2^n input block with a freshly allocated counter
// register and writes the result back. Throws invariant_error if any
// amplitude is left outside counter value 0.
void apply_oracle_circuit(const CircuitIR& circuit, std::span<amplitude> input_block);

// Line-oriented text form:
//   oracle n=<n> m=<m> counter=<M>
//   X q<i>
//   CADD mod=<m+1> ctrls=[q<i>,-q<j>,...]
//   CSUB mod=<m+1> ctrls=[...]
//   Z0C width=<M>
std::string to_text(const CircuitIR& circuit);

// elementary == false: number of IR blocks (2m + 1).
// elementary == true: gate count of the {X, Z, CX, CCX} expansion.
std::size_t gate_count(const CircuitIR& circuit, bool elementary);

}  // namespace dgrover
