#include "dgrover/elementary.hpp"

#include <algorithm>

#include "dgrover/errors.hpp"

namespace dgrover {

// Gate budget per piece (M = counter width, w = clause width):
//   carry-out of c + K      6M + 1 + 2*popcount(K)          <= 8M + 1
//   controlled c += K       6M + 2*popcount(K)              <= 8M
//   R1                      4 carry + 6 + M + add           <= 41M + 10
//   R2                      8 carry + 14 + M + add          <= 73M + 22
//   control AND (w <= 3)    <= 2*2 + 2*3 (X conjugation)     = 10
//   ADD / SUB block         <= 114M + 42, plus <= 6 IR X gates
//   Z0                      2 carry + 3                     <= 16M + 5
// With 2m clause blocks: total <= 2m(114M + 48) + 16M + 5 <= 377 m M for
// m, M >= 1, so 400 bounds it.

namespace {

class Emitter {
 public:
  Emitter(ElementaryCircuit& circuit, int clause_count, int max_width)
      : circuit_(circuit), clause_count_(clause_count) {
    const int n = circuit.input_qubits;
    const int width = circuit.counter_qubits;
    int next = n + width;
    flag_g_ = next++;
    flag_p_ = next++;
    flag_q_ = next++;
    flag_r_ = next++;
    flag_s_ = next++;
    carry_in_ = next++;
    for (int b = 0; b < width; ++b) constant_.push_back(next++);
    for (int i = 0; i < std::max(0, max_width - 2); ++i) ladder_.push_back(next++);
    circuit.ancilla_qubits = next - n - width;
  }

  void ir_gate(const Gate& gate) {
    switch (gate.kind) {
      case GateKind::pauli_x:
        x(gate.target);
        break;
      case GateKind::controlled_add:
        controlled_cycle(gate.controls, false);
        break;
      case GateKind::controlled_sub:
        controlled_cycle(gate.controls, true);
        break;
      case GateKind::zero_phase_on_counter:
        zero_phase();
        break;
    }
  }

 private:
  int width() const { return circuit_.counter_qubits; }
  std::uint64_t full() const { return (std::uint64_t{1} << width()) - 1; }
  // Counter bit b (0 = least significant).
  int counter_bit(int b) const { return circuit_.input_qubits + width() - 1 - b; }

  void x(int t) { circuit_.gates.push_back({ElementaryKind::x, t, -1, -1}); }
  void z(int t) { circuit_.gates.push_back({ElementaryKind::z, t, -1, -1}); }
  void cx(int c, int t) { circuit_.gates.push_back({ElementaryKind::cx, t, c, -1}); }
  void ccx(int a, int b, int t) { circuit_.gates.push_back({ElementaryKind::ccx, t, a, b}); }

  void maj(int a, int b, int c) {
    cx(c, b);
    cx(c, a);
    ccx(a, b, c);
  }
  void maj_inverse(int a, int b, int c) {
    ccx(a, b, c);
    cx(c, a);
    cx(c, b);
  }
  void uma(int a, int b, int c) {
    ccx(a, b, c);
    cx(c, a);
    cx(a, b);
  }

  int carry_source(int b) const { return b == 0 ? carry_in_ : constant_[b - 1]; }

  void load_constant(std::uint64_t value, int control) {
    for (int b = 0; b < width(); ++b) {
      if ((value >> b) & 1U) {
        if (control < 0) {
          x(constant_[b]);
        } else {
          cx(control, constant_[b]);
        }
      }
    }
  }

  // target ^= [c + value >= 2^M]; c and the constant register are restored.
  void carry_out(std::uint64_t value, int target) {
    load_constant(value, -1);
    for (int b = 0; b < width(); ++b) maj(carry_source(b), counter_bit(b), constant_[b]);
    cx(constant_[width() - 1], target);
    for (int b = width() - 1; b >= 0; --b) maj_inverse(carry_source(b), counter_bit(b), constant_[b]);
    load_constant(value, -1);
  }

  // c += value (mod 2^M) when `control` is set.
  void controlled_add_constant(std::uint64_t value, int control) {
    load_constant(value, control);
    for (int b = 0; b < width(); ++b) maj(carry_source(b), counter_bit(b), constant_[b]);
    for (int b = width() - 1; b >= 0; --b) uma(carry_source(b), counter_bit(b), constant_[b]);
    load_constant(value, control);
  }

  void controlled_complement(int control) {
    for (int b = 0; b < width(); ++b) cx(control, counter_bit(b));
  }

  // target ^= AND over controls (with polarity).
  void and_into(const std::vector<Control>& controls, int target) {
    for (const auto& c : controls) {
      if (!c.positive) x(c.qubit);
    }
    const std::size_t w = controls.size();
    if (w == 1) {
      cx(controls[0].qubit, target);
    } else if (w == 2) {
      ccx(controls[0].qubit, controls[1].qubit, target);
    } else {
      ccx(controls[0].qubit, controls[1].qubit, ladder_[0]);
      for (std::size_t i = 1; i + 2 < w; ++i) ccx(ladder_[i - 1], controls[i + 1].qubit, ladder_[i]);
      ccx(ladder_[w - 3], controls[w - 1].qubit, target);
      for (std::size_t i = w - 3; i >= 1; --i) ccx(ladder_[i - 1], controls[i + 1].qubit, ladder_[i]);
      ccx(controls[0].qubit, controls[1].qubit, ladder_[0]);
    }
    for (const auto& c : controls) {
      if (!c.positive) x(c.qubit);
    }
  }

  // p ^= g AND [c <= m]
  void predicate_low() {
    const std::uint64_t above = (full() + 1 - static_cast<std::uint64_t>(clause_count_ + 1)) & full();
    carry_out(above, flag_q_);
    x(flag_q_);
    ccx(flag_g_, flag_q_, flag_p_);
    x(flag_q_);
    carry_out(above, flag_q_);
  }

  // p ^= g AND [1 <= c <= m]
  void predicate_mid() {
    const std::uint64_t above = (full() + 1 - static_cast<std::uint64_t>(clause_count_ + 1)) & full();
    carry_out(above, flag_q_);
    carry_out(full(), flag_r_);
    x(flag_q_);
    ccx(flag_g_, flag_q_, flag_s_);
    x(flag_q_);
    ccx(flag_s_, flag_r_, flag_p_);
    x(flag_q_);
    ccx(flag_g_, flag_q_, flag_s_);
    x(flag_q_);
    carry_out(full(), flag_r_);
    carry_out(above, flag_q_);
  }

  void controlled_cycle(const std::vector<Control>& controls, bool inverse) {
    if (controls.empty()) throw argument_error("controlled counter gate without controls");
    const std::size_t start = circuit_.gates.size();
    and_into(controls, flag_g_);
    const std::size_t body = circuit_.gates.size();

    const auto m = static_cast<std::uint64_t>(clause_count_);
    // R1: c -> m - c = ~c + (m + 1)
    predicate_low();
    controlled_complement(flag_p_);
    controlled_add_constant((m + 1) & full(), flag_p_);
    predicate_low();
    // R2: c -> m + 1 - c = ~c + (m + 2)
    predicate_mid();
    controlled_complement(flag_p_);
    controlled_add_constant((m + 2) & full(), flag_p_);
    predicate_mid();

    if (inverse) std::reverse(circuit_.gates.begin() + static_cast<std::ptrdiff_t>(body), circuit_.gates.end());
    std::vector<ElementaryGate> uncompute(circuit_.gates.begin() + static_cast<std::ptrdiff_t>(start),
                                          circuit_.gates.begin() + static_cast<std::ptrdiff_t>(body));
    std::reverse(uncompute.begin(), uncompute.end());
    circuit_.gates.insert(circuit_.gates.end(), uncompute.begin(), uncompute.end());
  }

  void zero_phase() {
    // r = [c >= 1]; the phase flips when r == 0.
    carry_out(full(), flag_r_);
    x(flag_r_);
    z(flag_r_);
    x(flag_r_);
    carry_out(full(), flag_r_);
  }

  ElementaryCircuit& circuit_;
  int clause_count_;
  int flag_g_ = -1, flag_p_ = -1, flag_q_ = -1, flag_r_ = -1, flag_s_ = -1, carry_in_ = -1;
  std::vector<int> constant_;
  std::vector<int> ladder_;
};

std::size_t widest_controls(const std::vector<Gate>& gates) {
  std::size_t w = 0;
  for (const auto& g : gates) w = std::max(w, g.controls.size());
  return w;
}

}  // namespace

ElementaryCircuit expand_gate(const Gate& gate, int input_qubits, int counter_qubits,
                              int clause_count) {
  ElementaryCircuit out;
  out.input_qubits = input_qubits;
  out.counter_qubits = counter_qubits;
  Emitter emit(out, clause_count, static_cast<int>(gate.controls.size()));
  emit.ir_gate(gate);
  return out;
}

ElementaryCircuit expand_elementary(const CircuitIR& circuit) {
  ElementaryCircuit out;
  out.input_qubits = circuit.input_qubits;
  out.counter_qubits = circuit.counter_qubits;
  const auto gates = circuit.flat_gates();
  Emitter emit(out, circuit.clause_count, static_cast<int>(widest_controls(gates)));
  for (const auto& gate : gates) emit.ir_gate(gate);
  return out;
}

BasisImage run_basis(const ElementaryCircuit& circuit, std::uint64_t bits) {
  if (circuit.total_qubits() > 64) throw capacity_error("elementary circuit wider than 64 qubits");
  BasisImage image{bits, 1};
  auto bit = [&](int q) { return ((image.bits >> q) & 1U) != 0; };
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case ElementaryKind::x:
        image.bits ^= std::uint64_t{1} << g.target;
        break;
      case ElementaryKind::z:
        if (bit(g.target)) image.sign = -image.sign;
        break;
      case ElementaryKind::cx:
        if (bit(g.control0)) image.bits ^= std::uint64_t{1} << g.target;
        break;
      case ElementaryKind::ccx:
        if (bit(g.control0) && bit(g.control1)) image.bits ^= std::uint64_t{1} << g.target;
        break;
    }
  }
  return image;
}

}  // namespace dgrover
