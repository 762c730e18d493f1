#pragma once

#include <cstdint>
#include <string>

#include "dgrover/boolean_function.hpp"
#include "dgrover/query_ledger.hpp"
#include "dgrover/statevector.hpp"

namespace dgrover {

// floor((pi/4) * sqrt(2^n / a)). Exact in double arithmetic for n <= 26: the
// argument never lies within 1e-9 of an integer there (checked in tests
// against 50-digit arithmetic). Throws argument_error unless 1 <= a <= 2^n.
std::uint64_t grover_iterations(int n, std::uint64_t a);

// sin^2((2k + 1) * arcsin(sqrt(a / 2^n))) with k = grover_iterations(n, a).
double success_probability(int n, std::uint64_t a);

// sin^2((2k + 1) * arcsin(sqrt(a / 2^n))) for an arbitrary iteration count.
double rotation_success_probability(int n, std::uint64_t a, std::uint64_t iterations);

struct GroverPlan {
  int arity = 0;
  std::uint64_t assumed_solution_count = 0;
  std::uint64_t iterations = 0;
  double predicted_success = 0.0;
};

GroverPlan plan_grover(int n, std::uint64_t assumed_a);

// G = -H Z0 H Z_f on `reg`: oracle, Hadamards, zero reflection, Hadamards,
// global sign. One quantum query.
void apply_grover_iterate(const BooleanFunction& f, StateVector& state, QubitRange reg,
                          QueryLedger& ledger, std::string_view phase = phase::grover);
void apply_grover_iterate(const BooleanFunction& f, StateVector& state, QueryLedger& ledger,
                          std::string_view phase = phase::grover);

// State after H^n|0> and `iterations` iterates.
StateVector grover_state(const BooleanFunction& f, std::uint64_t iterations, QueryLedger& ledger,
                         std::string_view phase = phase::grover);

// Exact output distribution of a run with the given assumed count.
MeasurementDistribution grover_distribution(const BooleanFunction& f, std::uint64_t assumed_a);

struct GroverOutcome {
  std::uint64_t measured = 0;
  std::string measured_bits;
  bool is_solution = false;
  std::uint64_t iterations = 0;
  QueryLedger ledger;  // snapshot after the run
};

// Uniform start, grover_iterations(n, assumed_a) iterates, one sample, one
// classical check of the sample.
GroverOutcome run_grover(const BooleanFunction& f, std::uint64_t assumed_a, std::uint64_t seed,
                         QueryLedger& ledger);

}  // namespace dgrover
