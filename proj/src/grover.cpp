#include "dgrover/grover.hpp"

#include <cmath>
#include <numbers>

#include "dgrover/errors.hpp"

namespace dgrover {

namespace {

void check_count(int n, std::uint64_t a) {
  if (n < 1 || n > 62) throw argument_error("arity out of range");
  if (a == 0) throw argument_error("solution count must be at least 1");
  if (a > (std::uint64_t{1} << n)) throw argument_error("solution count exceeds 2^n");
}

}  // namespace

std::uint64_t grover_iterations(int n, std::uint64_t a) {
  check_count(n, a);
  const double ratio = std::ldexp(1.0, n) / static_cast<double>(a);
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

double rotation_success_probability(int n, std::uint64_t a, std::uint64_t iterations) {
  check_count(n, a);
  const double theta = std::asin(std::sqrt(static_cast<double>(a) / std::ldexp(1.0, n)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

double success_probability(int n, std::uint64_t a) {
  return rotation_success_probability(n, a, grover_iterations(n, a));
}

GroverPlan plan_grover(int n, std::uint64_t assumed_a) {
  return GroverPlan{n, assumed_a, grover_iterations(n, assumed_a), success_probability(n, assumed_a)};
}

void apply_grover_iterate(const BooleanFunction& f, StateVector& state, QubitRange reg,
                          QueryLedger& ledger, std::string_view phase) {
  apply_phase_oracle(f, state, reg, ledger, phase);
  state.apply_hadamard(reg);
  apply_zero_reflection(state, reg);
  state.apply_hadamard(reg);
  for (auto& a : state.mutable_amplitudes()) a = -a;
}

void apply_grover_iterate(const BooleanFunction& f, StateVector& state, QueryLedger& ledger,
                          std::string_view phase) {
  apply_grover_iterate(f, state, state.all(), ledger, phase);
}

StateVector grover_state(const BooleanFunction& f, std::uint64_t iterations, QueryLedger& ledger,
                         std::string_view phase) {
  StateVector state = StateVector::basis(f.arity(), 0);
  state.apply_hadamard(state.all());
  for (std::uint64_t i = 0; i < iterations; ++i) apply_grover_iterate(f, state, ledger, phase);
  return state;
}

MeasurementDistribution grover_distribution(const BooleanFunction& f, std::uint64_t assumed_a) {
  QueryLedger scratch;
  const StateVector state = grover_state(f, grover_iterations(f.arity(), assumed_a), scratch);
  return state.measurement_distribution(state.all());
}

GroverOutcome run_grover(const BooleanFunction& f, std::uint64_t assumed_a, std::uint64_t seed,
                         QueryLedger& ledger) {
  const std::uint64_t iterations = grover_iterations(f.arity(), assumed_a);
  const StateVector state = grover_state(f, iterations, ledger);
  GroverOutcome outcome;
  outcome.iterations = iterations;
  outcome.measured = sample(state.measurement_distribution(state.all()), seed);
  outcome.measured_bits = to_bit_string(outcome.measured, f.arity());
  outcome.is_solution = f.evaluate(outcome.measured, ledger);
  outcome.ledger = ledger;
  return outcome;
}

}  // namespace dgrover
