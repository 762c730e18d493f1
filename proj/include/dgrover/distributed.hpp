#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgrover/amplitude_estimation.hpp"
#include "dgrover/boolean_function.hpp"
#include "dgrover/grover.hpp"
#include "dgrover/query_ledger.hpp"

namespace dgrover {

// Splitting f into 2^k subfunctions f_i(x) = f(x || y_i), where y_i is the
// k-bit binary form of i placed in the low input bits. Machine i therefore
// owns the inputs {x * 2^k + i}.
struct DecompositionPlan {
  int n = 0;
  int k = 0;
  int sub_arity = 0;
  std::uint64_t machine_count = 0;

  std::string suffix(std::uint64_t machine) const;
  // Full n-bit input of machine `machine`'s sub-input x.
  std::uint64_t join(std::uint64_t x, std::uint64_t machine) const { return (x << k) | machine; }
};

DecompositionPlan plan_decomposition(int n, int k);

std::vector<BooleanFunction> decompose(const BooleanFunction& f, int k);

// t_a = ceil(2 pi sqrt(a) + 11).
std::uint64_t threshold_t_a(std::uint64_t a);

struct CandidateSet {
  std::uint64_t machine_index = 0;
  std::uint64_t estimate = 0;  // a_i'
  std::uint64_t t_a = 0;
  std::vector<std::uint64_t> candidates;  // ascending, never contains 0
  // The counting estimate was 0, so the machine stops. This is what the
  // algorithm concludes, not ground truth.
  bool is_constant_zero = false;
  std::optional<CountEstimate> counting;
};

// Pure window arithmetic: [max(1, estimate - t_a), min(2^sub_arity, estimate + t_a)],
// or empty when estimate == 0.
CandidateSet candidate_window(std::uint64_t estimate, std::uint64_t a, int sub_arity);

// Counting on a grid of counting_grid_for(arity) points, then the window.
CandidateSet build_candidate_set(const BooleanFunction& f_i, std::uint64_t a, std::uint64_t seed,
                                 QueryLedger& ledger, std::uint64_t machine_index = 0);

// Candidates are tried largest first (fewest iterations per attempt).
std::vector<std::uint64_t> sweep_order(const std::vector<std::uint64_t>& candidates);

struct SweepAttempt {
  std::uint64_t assumed_count = 0;
  std::uint64_t iterations = 0;
  std::uint64_t measured = 0;
  bool success = false;
};

struct SweepResult {
  std::vector<SweepAttempt> attempts;
  std::optional<GroverOutcome> found;
};

// One Grover run per candidate until a verified solution appears. Attempt j
// uses seed mix_seed(seed, j + 1).
SweepResult sweep_candidates(const BooleanFunction& f_i, const std::vector<std::uint64_t>& candidates,
                             std::uint64_t seed, QueryLedger& ledger);

struct MachineReport {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  bool ran = false;        // serial runs never reach later machines
  bool fast_path = false;  // a = 1: Grover with assumed count 1, no counting
  std::optional<CandidateSet> candidates;
  SweepResult sweep;
  QueryLedger ledger;
  std::uint64_t true_solution_count = 0;  // harness data
};

enum class DistStatus { found, not_found };

struct DistOutcome {
  DistStatus status = DistStatus::not_found;
  std::uint64_t solution = 0;
  std::string solution_bits;
  std::int64_t found_by_machine = -1;
  DecompositionPlan plan;
  std::vector<MachineReport> machines;

  std::uint64_t quantum_queries = 0;
  std::uint64_t classical_queries = 0;
  std::uint64_t serial_cost = 0;     // sum of per-machine totals
  std::uint64_t parallel_depth = 0;  // max of per-machine totals

  // Harness data: some machine stopped on a zero estimate although its block
  // contains solutions.
  bool stopped_machine_had_solutions = false;
};

struct DistOptions {
  // Remark-5 shortcut for a = 1 (parallel only): skip counting and run
  // Grover with assumed count 1 on every machine.
  bool fast_path_a1 = true;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Machine seeds are mix_seed(seed, i); counting within a machine uses
// mix_seed(machine_seed, 0).
DistOutcome run_serial(const BooleanFunction& f, int k, std::uint64_t a, std::uint64_t seed);
DistOutcome run_parallel(const BooleanFunction& f, int k, std::uint64_t a, std::uint64_t seed,
                         const DistOptions& options = {});

struct QueryBounds {
  // (2 t_a + 1) floor(pi/4 sqrt(2^{n-k})) + 2^k ceil(sqrt(2^{n-k})) + 2 t_a + 1
  std::uint64_t serial = 0;
  // (2 t_a + 1) floor(pi/4 sqrt(2^{n-k})) + ceil(sqrt(2^{n-k})) + 2 t_a + 1
  std::uint64_t parallel = 0;
  // floor(pi/4 sqrt(2^{n-k})) when a = 1
  std::optional<std::uint64_t> parallel_fast_path;
  // floor(pi/4 sqrt(2^{n-k})) + (2^k - 1)(4 sqrt(2^{n-k}) - 1), the closed
  // form stated for the serial algorithm; reported, not enforced.
  double serial_stated = 0.0;
};

QueryBounds worst_case_query_bound(int n, int k, std::uint64_t a);

const char* to_string(DistStatus status);

}  // namespace dgrover
