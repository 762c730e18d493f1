#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "dgrover/errors.hpp"
#include "dgrover/query_ledger.hpp"

namespace dgrover {

using amplitude = std::complex<double>;

// Bit convention used throughout the library: in a q-qubit state, qubit 0 is
// the MOST significant bit of the basis index. A register is a contiguous run
// of qubits; its first qubit is the register's most significant bit.
struct QubitRange {
  int first = 0;
  int count = 0;

  int end() const noexcept { return first + count; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << count; }
  bool operator==(const QubitRange&) const = default;
};

// Default cap on the total qubit count of any dense state (2^26 amplitudes).
inline constexpr int kDefaultMaxQubits = 26;

// Effective cap: kDefaultMaxQubits unless the DGROVER_MAX_QUBITS environment
// variable holds a positive integer (clamped to 34).
int max_qubits();

// Throws capacity_error when `qubits` exceeds max_qubits().
void require_capacity(int qubits, std::string_view what);

// A linear map applied in place to a dense block of 2^w amplitudes, indexed by
// the register's basis value.
using RegisterTransform = std::function<void(std::span<amplitude>)>;

// Probability of each basis outcome of a measured register.
struct MeasurementDistribution {
  std::vector<double> probabilities;

  std::size_t size() const noexcept { return probabilities.size(); }
  double operator[](std::size_t i) const { return probabilities[i]; }
  double total() const;
};

class StateVector {
 public:
  // |basis_index> on `qubit_count` qubits.
  static StateVector basis(int qubit_count, std::uint64_t basis_index);
  // Takes ownership of explicit amplitudes; the length must be a power of two
  // and the norm must be 1 within 1e-9.
  static StateVector from_amplitudes(std::vector<amplitude> amplitudes);

  int qubit_count() const noexcept { return qubit_count_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  QubitRange all() const noexcept { return {0, qubit_count_}; }

  std::span<const amplitude> amplitudes() const noexcept { return amplitudes_; }
  const amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  // Walsh-Hadamard transform on every qubit of `reg`.
  void apply_hadamard(QubitRange reg);

  // Multiplies each amplitude by phase_sign(value of reg), which must be +1 or -1.
  void apply_diagonal_phase(QubitRange reg, const std::function<int(std::uint64_t)>& phase_sign);

  // Applies `transform` to the sub-block of `reg` for every assignment of the
  // remaining qubits.
  void apply_register_transform(QubitRange reg, const RegisterTransform& transform);

  // Lambda(U): for every basis value j of `control`, applies `target_transform`
  // j times to the matching branch of `target`. Charges
  // (2^control.count - 1) * query_cost_per_application quantum queries, the
  // count of the binary-powers circuit (sum of 2^i over control qubits).
  void apply_controlled_powers(QubitRange control, QubitRange target,
                               const RegisterTransform& target_transform,
                               std::uint64_t query_cost_per_application, QueryLedger& ledger,
                               std::string_view phase = phase::oracle);

  // Exact marginal distribution of `reg`.
  MeasurementDistribution measurement_distribution(QubitRange reg) const;

  // Direct access for kernels that act on the whole state.
  std::span<amplitude> mutable_amplitudes() noexcept { return amplitudes_; }

 private:
  StateVector(int qubit_count, std::vector<amplitude> amplitudes)
      : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {}

  void check_range(QubitRange reg) const;

  int qubit_count_;
  std::vector<amplitude> amplitudes_;
};

// Draws one outcome by inverse CDF over ascending outcome index, using a
// uniform variate from std::mt19937_64 seeded with `seed`.
std::uint64_t sample(const MeasurementDistribution& distribution, std::uint64_t seed);

namespace kernels {

// In-place Walsh-Hadamard transform over all bits of a 2^w block.
void walsh_hadamard(std::span<amplitude> block);

// QFT_{2^w}|j> = 2^{-w/2} sum_k e^{+2 pi i j k / 2^w}|k>; inverse uses the
// conjugate phase. Radix-2, in place.
void fourier(std::span<amplitude> block, bool inverse);

// Flips the sign of every amplitude except index 0 (i.e. 2|0><0| - I).
void reflect_about_zero(std::span<amplitude> block);

}  // namespace kernels

}  // namespace dgrover
