#include "dgrover/amplitude_estimation.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "dgrover/errors.hpp"

namespace dgrover {

StatePreparation hadamard_preparation() {
  return {kernels::walsh_hadamard, kernels::walsh_hadamard};
}

QOperator::QOperator(BooleanFunction f, StatePreparation prep) : f_(std::move(f)), prep_(std::move(prep)) {}

void QOperator::operator()(std::span<amplitude> block) const {
  f_.apply_phase(block);
  prep_.inverse(block);
  // U0_perp = 2|0><0| - I
  kernels::reflect_about_zero(block);
  prep_.forward(block);
}

QOperator build_q_operator(const BooleanFunction& f, StatePreparation prep) {
  return QOperator(f, std::move(prep));
}

StateVector est_amp_state(const BooleanFunction& f, int precision_qubits, QueryLedger& ledger,
                          const StatePreparation& prep) {
  if (precision_qubits < 1) throw argument_error("precision register needs at least one qubit");
  const int n = f.arity();
  const int total = precision_qubits + n;
  require_capacity(total, "amplitude estimation");
  const QubitRange control{0, precision_qubits};
  const QubitRange target{precision_qubits, n};

  StateVector state = StateVector::basis(total, 0);
  state.apply_register_transform(target, prep.forward);
  state.apply_register_transform(control, [](std::span<amplitude> b) { kernels::fourier(b, false); });
  const QOperator q = build_q_operator(f, prep);
  state.apply_controlled_powers(control, target, std::ref(q), q.query_cost(), ledger, phase::counting);
  state.apply_register_transform(control, [](std::span<amplitude> b) { kernels::fourier(b, true); });
  return state;
}

MeasurementDistribution est_amp_distribution(const BooleanFunction& f, int precision_qubits,
                                             const StatePreparation& prep) {
  QueryLedger scratch;
  const StateVector state = est_amp_state(f, precision_qubits, scratch, prep);
  return state.measurement_distribution({0, precision_qubits});
}

CountEstimate run_est_amp(const BooleanFunction& f, int precision_qubits, std::uint64_t seed,
                          QueryLedger& ledger, const StatePreparation& prep) {
  const StateVector state = est_amp_state(f, precision_qubits, ledger, prep);
  CountEstimate estimate;
  estimate.grid = std::uint64_t{1} << precision_qubits;
  estimate.y = sample(state.measurement_distribution({0, precision_qubits}), seed);
  const double s = std::sin(std::numbers::pi * static_cast<double>(estimate.y) /
                            static_cast<double>(estimate.grid));
  estimate.a_tilde = s * s;
  estimate.t_prime = std::ldexp(estimate.a_tilde, f.arity());
  estimate.t_prime_rounded = static_cast<std::uint64_t>(std::floor(estimate.t_prime + 0.5));
  estimate.ledger = ledger;
  return estimate;
}

CountEstimate run_count(const BooleanFunction& f, std::uint64_t grid, std::uint64_t seed,
                        QueryLedger& ledger) {
  if (grid < 2 || !std::has_single_bit(grid)) {
    throw argument_error("counting grid " + std::to_string(grid) + " is not a power of two >= 2");
  }
  return run_est_amp(f, std::countr_zero(grid), seed, ledger);
}

std::uint64_t counting_grid_for(int sub_arity) {
  if (sub_arity < 1) throw argument_error("sub-arity must be at least 1");
  return std::uint64_t{1} << ((sub_arity + 1) / 2);
}

std::uint64_t nominal_counting_queries(int sub_arity) {
  if (sub_arity < 1) throw argument_error("sub-arity must be at least 1");
  if (sub_arity % 2 == 0) return std::uint64_t{1} << (sub_arity / 2);
  // sqrt(2^s) is irrational for odd s; find the ceiling exactly in integers.
  const std::uint64_t n = std::uint64_t{1} << sub_arity;
  auto r = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  while (r * r < n) ++r;
  return r;
}

double amplitude_error_bound(double a_g, int precision_qubits, int k) {
  const double grid = std::ldexp(1.0, precision_qubits);
  const double kk = static_cast<double>(k);
  return 2.0 * std::numbers::pi * kk * std::sqrt(a_g * (1.0 - a_g)) / grid +
         kk * kk * std::numbers::pi * std::numbers::pi / (grid * grid);
}

double count_error_bound(std::uint64_t t, int n, int precision_qubits, int k) {
  if (k < 1) throw argument_error("k must be at least 1");
  const double size = std::ldexp(1.0, n);
  const double grid = std::ldexp(1.0, precision_qubits);
  const double td = static_cast<double>(t);
  const double kk = static_cast<double>(k);
  return 2.0 * std::numbers::pi * kk * std::sqrt(td * (size - td)) / grid +
         kk * kk * std::numbers::pi * std::numbers::pi * size / (grid * grid);
}

double sqrt_grid_error_bound(std::uint64_t t, int n) {
  const double size = std::ldexp(1.0, n);
  const double td = static_cast<double>(t);
  return 2.0 * std::numbers::pi * std::sqrt(td * (size - td) / size) + 11.0;
}

double estimation_confidence(int k) {
  if (k < 1) throw argument_error("k must be at least 1");
  if (k == 1) return 8.0 / (std::numbers::pi * std::numbers::pi);
  return 1.0 - 1.0 / (2.0 * (k - 1));
}

}  // namespace dgrover
