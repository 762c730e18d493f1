#pragma once

#include <cstdint>

#include "dgrover/boolean_function.hpp"
#include "dgrover/query_ledger.hpp"
#include "dgrover/statevector.hpp"

namespace dgrover {

// State preparation A and its inverse, both acting on the n-qubit target block.
struct StatePreparation {
  RegisterTransform forward;
  RegisterTransform inverse;
};

// A = H^n, used for counting.
StatePreparation hadamard_preparation();

// Q = A (2|0><0| - I) A^{-1} U_f, acting on a 2^n block. Each application
// makes one oracle query.
class QOperator {
 public:
  QOperator(BooleanFunction f, StatePreparation prep);

  void operator()(std::span<amplitude> block) const;
  std::uint64_t query_cost() const noexcept { return 1; }
  int arity() const noexcept { return f_.arity(); }

 private:
  BooleanFunction f_;
  StatePreparation prep_;
};

QOperator build_q_operator(const BooleanFunction& f, StatePreparation prep = hadamard_preparation());

// Full state of |0^m> A|0^n> -> (QFT x I) -> Lambda(Q) -> (QFT^dagger x I),
// first register = qubits [0, m). Charges 2^m - 1 quantum queries.
StateVector est_amp_state(const BooleanFunction& f, int precision_qubits, QueryLedger& ledger,
                          const StatePreparation& prep = hadamard_preparation());

// Exact distribution of the first-register outcome y (no ledger charge).
MeasurementDistribution est_amp_distribution(const BooleanFunction& f, int precision_qubits,
                                             const StatePreparation& prep = hadamard_preparation());

struct CountEstimate {
  std::uint64_t y = 0;
  std::uint64_t grid = 0;             // 2^m
  double a_tilde = 0.0;               // sin^2(pi y / 2^m)
  double t_prime = 0.0;               // 2^n * a_tilde
  std::uint64_t t_prime_rounded = 0;  // nearest integer, ties up
  QueryLedger ledger;                 // snapshot after the run
};

// Samples y from the estimation distribution; charges 2^m - 1 queries.
CountEstimate run_est_amp(const BooleanFunction& f, int precision_qubits, std::uint64_t seed,
                          QueryLedger& ledger, const StatePreparation& prep = hadamard_preparation());

// Counting with A = H^n on a grid of 2^m points. Throws argument_error when
// `grid` is not a power of two >= 2.
CountEstimate run_count(const BooleanFunction& f, std::uint64_t grid, std::uint64_t seed,
                        QueryLedger& ledger);

// 2^ceil(s/2): smallest power of two >= sqrt(2^s).
std::uint64_t counting_grid_for(int sub_arity);

// ceil(sqrt(2^s)), the nominal query count of counting at precision sqrt(N).
std::uint64_t nominal_counting_queries(int sub_arity);

// |a~ - a_g| <= 2 pi k sqrt(a_g (1 - a_g)) / 2^m + k^2 pi^2 / 2^{2m}
double amplitude_error_bound(double a_g, int precision_qubits, int k = 1);

// |t' - t| <= 2 pi k sqrt(t (2^n - t)) / 2^m + k^2 pi^2 2^n / 2^{2m}
double count_error_bound(std::uint64_t t, int n, int precision_qubits, int k = 1);

// |t' - t| <= 2 pi sqrt(t (2^n - t) / 2^n) + 11, for a grid of about sqrt(2^n).
double sqrt_grid_error_bound(std::uint64_t t, int n);

// Probability floor of the error bounds: 8/pi^2 for k = 1, 1 - 1/(2(k-1)) above.
double estimation_confidence(int k);

}  // namespace dgrover
