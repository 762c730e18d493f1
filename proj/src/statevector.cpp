#include "dgrover/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>

namespace dgrover {

int max_qubits() {
  if (const char* env = std::getenv("DGROVER_MAX_QUBITS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(std::min(value, 34L));
  }
  return kDefaultMaxQubits;
}

void require_capacity(int qubits, std::string_view what) {
  if (qubits > max_qubits()) {
    throw capacity_error(std::string(what) + " needs " + std::to_string(qubits) +
                         " qubits; capacity is " + std::to_string(max_qubits()));
  }
}

double MeasurementDistribution::total() const {
  double sum = 0.0;
  for (double p : probabilities) sum += p;
  return sum;
}

StateVector StateVector::basis(int qubit_count, std::uint64_t basis_index) {
  if (qubit_count < 1) throw argument_error("qubit_count must be at least 1");
  require_capacity(qubit_count, "state vector");
  const std::uint64_t dim = std::uint64_t{1} << qubit_count;
  if (basis_index >= dim) {
    throw argument_error("basis index " + std::to_string(basis_index) + " out of range for " +
                         std::to_string(qubit_count) + " qubits");
  }
  std::vector<amplitude> amps(dim);
  amps[basis_index] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<amplitude> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw argument_error("amplitude count must be a power of two >= 2");
  }
  const int qubits = std::countr_zero(n);
  require_capacity(qubits, "state vector");
  StateVector state(qubits, std::move(amplitudes));
  if (std::abs(state.norm_squared() - 1.0) > 1e-9) throw argument_error("state is not normalized");
  return state;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void StateVector::check_range(QubitRange reg) const {
  if (reg.first < 0 || reg.count < 1 || reg.end() > qubit_count_) {
    throw argument_error("qubit range [" + std::to_string(reg.first) + ", " +
                         std::to_string(reg.end()) + ") outside a " +
                         std::to_string(qubit_count_) + "-qubit state");
  }
}

void StateVector::apply_hadamard(QubitRange reg) {
  check_range(reg);
  const double r = std::numbers::sqrt2 / 2.0;
  const std::size_t dim = amplitudes_.size();
  for (int q = reg.first; q < reg.end(); ++q) {
    const std::size_t stride = std::size_t{1} << (qubit_count_ - 1 - q);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const amplitude a = amplitudes_[i];
        const amplitude b = amplitudes_[i + stride];
        amplitudes_[i] = (a + b) * r;
        amplitudes_[i + stride] = (a - b) * r;
      }
    }
  }
}

void StateVector::apply_diagonal_phase(QubitRange reg,
                                       const std::function<int(std::uint64_t)>& phase_sign) {
  check_range(reg);
  const int shift = qubit_count_ - reg.end();
  const std::uint64_t mask = reg.dimension() - 1;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const int s = phase_sign((i >> shift) & mask);
    if (s == -1) {
      amplitudes_[i] = -amplitudes_[i];
    } else if (s != 1) {
      throw argument_error("phase predicate must return +1 or -1");
    }
  }
}

void StateVector::apply_register_transform(QubitRange reg, const RegisterTransform& transform) {
  check_range(reg);
  const int shift = qubit_count_ - reg.end();
  const std::size_t width = reg.dimension();
  if (shift == 0) {
    for (std::size_t base = 0; base < amplitudes_.size(); base += width) {
      transform(std::span<amplitude>(amplitudes_).subspan(base, width));
    }
    return;
  }
  const std::size_t low_count = std::size_t{1} << shift;
  const std::size_t high_count = std::size_t{1} << reg.first;
  std::vector<amplitude> buffer(width);
  for (std::size_t hi = 0; hi < high_count; ++hi) {
    for (std::size_t lo = 0; lo < low_count; ++lo) {
      const std::size_t base = (hi << (reg.count + shift)) | lo;
      for (std::size_t v = 0; v < width; ++v) buffer[v] = amplitudes_[base | (v << shift)];
      transform(buffer);
      for (std::size_t v = 0; v < width; ++v) amplitudes_[base | (v << shift)] = buffer[v];
    }
  }
}

void StateVector::apply_controlled_powers(QubitRange control, QubitRange target,
                                          const RegisterTransform& target_transform,
                                          std::uint64_t query_cost_per_application,
                                          QueryLedger& ledger, std::string_view phase) {
  check_range(control);
  check_range(target);
  if (control.first < target.end() && target.first < control.end()) {
    throw argument_error("control and target registers overlap");
  }

  const int control_shift = qubit_count_ - control.end();
  const int target_shift = qubit_count_ - target.end();
  std::vector<int> other_bits;
  for (int q = 0; q < qubit_count_; ++q) {
    const bool in_control = q >= control.first && q < control.end();
    const bool in_target = q >= target.first && q < target.end();
    if (!in_control && !in_target) other_bits.push_back(qubit_count_ - 1 - q);
  }

  const std::size_t powers = control.dimension();
  const std::size_t width = target.dimension();
  std::vector<amplitude> original(width);
  std::vector<amplitude> previous_original(width);
  std::vector<amplitude> result(width);

  const std::size_t contexts = std::size_t{1} << other_bits.size();
  for (std::size_t ctx = 0; ctx < contexts; ++ctx) {
    std::size_t base = 0;
    for (std::size_t t = 0; t < other_bits.size(); ++t) {
      base |= ((ctx >> t) & 1U) << other_bits[t];
    }
    for (std::size_t j = 0; j < powers; ++j) {
      const std::size_t row = base | (j << control_shift);
      for (std::size_t v = 0; v < width; ++v) original[v] = amplitudes_[row | (v << target_shift)];
      if (j == 0) {
        // Q^0 is the identity.
        result = original;
      } else if (original == previous_original) {
        // Same input as the previous branch: one more application suffices.
        target_transform(result);
      } else {
        result = original;
        for (std::size_t rep = 0; rep < j; ++rep) target_transform(result);
      }
      for (std::size_t v = 0; v < width; ++v) amplitudes_[row | (v << target_shift)] = result[v];
      std::swap(previous_original, original);
    }
  }
  ledger.charge_quantum(phase, (powers - 1) * query_cost_per_application);
}

MeasurementDistribution StateVector::measurement_distribution(QubitRange reg) const {
  check_range(reg);
  const int shift = qubit_count_ - reg.end();
  const std::uint64_t mask = reg.dimension() - 1;
  MeasurementDistribution dist;
  dist.probabilities.assign(reg.dimension(), 0.0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    dist.probabilities[(i >> shift) & mask] += std::norm(amplitudes_[i]);
  }
  return dist;
}

std::uint64_t sample(const MeasurementDistribution& distribution, std::uint64_t seed) {
  if (distribution.size() == 0) throw argument_error("empty distribution");
  std::mt19937_64 engine(seed);
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    const double p = distribution[i];
    if (p < 0.0) throw argument_error("negative probability in distribution");
    if (p > 0.0) last_nonzero = i;
    cumulative += p;
    if (p > 0.0 && u < cumulative) return i;
  }
  // Rounding left the cumulative sum just below u.
  return last_nonzero;
}

namespace kernels {

void walsh_hadamard(std::span<amplitude> block) {
  const double r = std::numbers::sqrt2 / 2.0;
  const std::size_t dim = block.size();
  for (std::size_t stride = dim / 2; stride >= 1; stride /= 2) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const amplitude a = block[i];
        const amplitude b = block[i + stride];
        block[i] = (a + b) * r;
        block[i + stride] = (a - b) * r;
      }
    }
  }
}

void fourier(std::span<amplitude> block, bool inverse) {
  const std::size_t n = block.size();
  if (n == 0 || !std::has_single_bit(n)) throw argument_error("fourier block must be a power of two");
  if (n == 1) return;
  const int bits = std::countr_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rev = 0;
    for (int b = 0; b < bits; ++b) rev |= ((i >> b) & 1U) << (bits - 1 - b);
    if (i < rev) std::swap(block[i], block[rev]);
  }
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t len = 2; len <= n; len *= 2) {
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < half; ++k) {
      const amplitude w = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                                              static_cast<double>(len));
      for (std::size_t base = 0; base < n; base += len) {
        const amplitude a = block[base + k];
        const amplitude b = block[base + k + half] * w;
        block[base + k] = a + b;
        block[base + k + half] = a - b;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& a : block) a *= scale;
}

void reflect_about_zero(std::span<amplitude> block) {
  for (std::size_t i = 1; i < block.size(); ++i) block[i] = -block[i];
}

}  // namespace kernels

}  // namespace dgrover
