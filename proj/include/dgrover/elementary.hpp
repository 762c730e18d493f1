#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dgrover/oracle_circuit.hpp"

namespace dgrover {

// Expansion of an oracle circuit into the gate set {X, Z, CX, CCX}. Every gate
// maps basis states to basis states up to a sign, so expanded circuits can be
// checked exhaustively by bit propagation.
//
// Qubit layout: inputs 0..n-1, counter n..n+M-1 (most significant first),
// then ancillas. All ancillas start and end in |0>.
//
// Construction of one controlled ADD mod (m+1) on the M-bit counter c:
//   g    <- AND of the block's controls (Toffoli ladder)
//   R1:  c -> m - c      on 0 <= c <= m, controlled by g
//   R2:  c -> m + 1 - c  on 1 <= c <= m, controlled by g
//   g    <- uncomputed
// R2 after R1 is the cycle 0 -> 1 -> ... -> m -> 0 and fixes c > m. Each
// reflection is "complement, then add a constant", using a ripple-carry
// adder (MAJ/UMA) against a constant register; range predicates come from
// the carry-out of c + (2^M - K). SUB is the same gate list reversed.
enum class ElementaryKind { x, z, cx, ccx };

struct ElementaryGate {
  ElementaryKind kind = ElementaryKind::x;
  int target = 0;
  int control0 = -1;
  int control1 = -1;
};

struct ElementaryCircuit {
  int input_qubits = 0;
  int counter_qubits = 0;
  int ancilla_qubits = 0;
  std::vector<ElementaryGate> gates;

  int total_qubits() const noexcept { return input_qubits + counter_qubits + ancilla_qubits; }
};

ElementaryCircuit expand_elementary(const CircuitIR& circuit);

// Expansion of a single IR gate acting on n inputs and an M-qubit counter;
// used to check ADD/SUB and Z0 in isolation.
ElementaryCircuit expand_gate(const Gate& gate, int input_qubits, int counter_qubits,
                              int clause_count);

struct BasisImage {
  std::uint64_t bits = 0;  // bit q holds qubit q
  int sign = 1;
};

// Runs the circuit on one basis state. Requires total_qubits() <= 64.
BasisImage run_basis(const ElementaryCircuit& circuit, std::uint64_t bits);

// Constant of the documented bound
//   elementary gate count <= kElementaryGateConstant * m * ceil(log2(m + 1))
// for CNFs whose clauses have at most three literals. Derivation in
// elementary.cpp.
inline constexpr std::size_t kElementaryGateConstant = 400;

}  // namespace dgrover
