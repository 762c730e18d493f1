#include "dgrover/distributed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "dgrover/errors.hpp"
#include "dgrover/seeding.hpp"

namespace dgrover {

std::string DecompositionPlan::suffix(std::uint64_t machine) const { return to_bit_string(machine, k); }

DecompositionPlan plan_decomposition(int n, int k) {
  if (k < 1 || k >= n) {
    throw argument_error("k must satisfy 1 <= k < n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (k > 30) throw capacity_error("too many machines");
  return DecompositionPlan{n, k, n - k, std::uint64_t{1} << k};
}

std::vector<BooleanFunction> decompose(const BooleanFunction& f, int k) {
  const DecompositionPlan plan = plan_decomposition(f.arity(), k);
  std::vector<BooleanFunction> parts;
  parts.reserve(plan.machine_count);
  for (std::uint64_t i = 0; i < plan.machine_count; ++i) parts.push_back(restrict(f, k, i));
  return parts;
}

std::uint64_t threshold_t_a(std::uint64_t a) {
  if (a < 1) throw argument_error("solution count must be at least 1");
  return static_cast<std::uint64_t>(
      std::ceil(2.0 * std::numbers::pi * std::sqrt(static_cast<double>(a)) + 11.0));
}

CandidateSet candidate_window(std::uint64_t estimate, std::uint64_t a, int sub_arity) {
  CandidateSet set;
  set.estimate = estimate;
  set.t_a = threshold_t_a(a);
  if (estimate == 0) {
    set.is_constant_zero = true;
    return set;
  }
  const std::uint64_t size = std::uint64_t{1} << sub_arity;
  const std::uint64_t low = estimate > set.t_a ? std::max<std::uint64_t>(1, estimate - set.t_a) : 1;
  const std::uint64_t high = std::min(size, estimate + set.t_a);
  for (std::uint64_t b = low; b <= high; ++b) set.candidates.push_back(b);
  return set;
}

CandidateSet build_candidate_set(const BooleanFunction& f_i, std::uint64_t a, std::uint64_t seed,
                                 QueryLedger& ledger, std::uint64_t machine_index) {
  const CountEstimate estimate = run_count(f_i, counting_grid_for(f_i.arity()), seed, ledger);
  CandidateSet set = candidate_window(estimate.t_prime_rounded, a, f_i.arity());
  set.machine_index = machine_index;
  set.counting = estimate;
  return set;
}

std::vector<std::uint64_t> sweep_order(const std::vector<std::uint64_t>& candidates) {
  std::vector<std::uint64_t> order = candidates;
  std::sort(order.begin(), order.end(), std::greater<>());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  return order;
}

SweepResult sweep_candidates(const BooleanFunction& f_i, const std::vector<std::uint64_t>& candidates,
                             std::uint64_t seed, QueryLedger& ledger) {
  SweepResult result;
  const auto order = sweep_order(candidates);
  for (std::size_t j = 0; j < order.size(); ++j) {
    GroverOutcome outcome = run_grover(f_i, order[j], mix_seed(seed, j + 1), ledger);
    result.attempts.push_back({order[j], outcome.iterations, outcome.measured, outcome.is_solution});
    if (outcome.is_solution) {
      result.found = std::move(outcome);
      break;
    }
  }
  return result;
}

namespace {

// Counting (or the a = 1 shortcut) followed by the sweep, for one machine.
MachineReport run_machine(const BooleanFunction& f_i, std::uint64_t index, std::uint64_t a,
                          std::uint64_t master_seed, bool fast_path) {
  MachineReport report;
  report.index = index;
  report.seed = mix_seed(master_seed, index);
  report.ran = true;
  report.fast_path = fast_path;
  report.true_solution_count = solution_count(f_i);
  if (fast_path) {
    report.sweep = sweep_candidates(f_i, {1}, report.seed, report.ledger);
    return report;
  }
  report.candidates = build_candidate_set(f_i, a, mix_seed(report.seed, 0), report.ledger, index);
  if (!report.candidates->candidates.empty()) {
    report.sweep = sweep_candidates(f_i, report.candidates->candidates, report.seed, report.ledger);
  }
  return report;
}

void finalize(DistOutcome& outcome) {
  for (const auto& m : outcome.machines) {
    outcome.quantum_queries += m.ledger.quantum_queries();
    outcome.classical_queries += m.ledger.classical_queries();
    outcome.serial_cost += m.ledger.total();
    outcome.parallel_depth = std::max(outcome.parallel_depth, m.ledger.total());
    if (m.candidates && m.candidates->is_constant_zero && m.true_solution_count > 0) {
      outcome.stopped_machine_had_solutions = true;
    }
  }
}

void record_win(DistOutcome& outcome, const MachineReport& machine) {
  outcome.status = DistStatus::found;
  outcome.found_by_machine = static_cast<std::int64_t>(machine.index);
  outcome.solution = outcome.plan.join(machine.sweep.found->measured, machine.index);
  outcome.solution_bits = to_bit_string(outcome.solution, outcome.plan.n);
}

}  // namespace

DistOutcome run_serial(const BooleanFunction& f, int k, std::uint64_t a, std::uint64_t seed) {
  if (a < 1) throw argument_error("solution count must be at least 1");
  DistOutcome outcome;
  outcome.plan = plan_decomposition(f.arity(), k);
  const auto parts = decompose(f, k);
  outcome.machines.resize(parts.size());
  for (std::uint64_t i = 0; i < parts.size(); ++i) {
    outcome.machines[i].index = i;
    outcome.machines[i].seed = mix_seed(seed, i);
    outcome.machines[i].true_solution_count = solution_count(parts[i]);
  }

  for (std::uint64_t i = 0; i < parts.size(); ++i) {
    MachineReport& machine = outcome.machines[i];
    machine = run_machine(parts[i], i, a, seed, false);
    if (machine.candidates->is_constant_zero) continue;
    // The first machine with a non-empty window decides the run.
    if (machine.sweep.found) record_win(outcome, machine);
    break;
  }
  finalize(outcome);
  return outcome;
}

DistOutcome run_parallel(const BooleanFunction& f, int k, std::uint64_t a, std::uint64_t seed,
                         const DistOptions& options) {
  if (a < 1) throw argument_error("solution count must be at least 1");
  DistOutcome outcome;
  outcome.plan = plan_decomposition(f.arity(), k);
  const auto parts = decompose(f, k);
  const bool fast_path = options.fast_path_a1 && a == 1;
  outcome.machines.resize(parts.size());

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, parts.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      outcome.machines[i] = run_machine(parts[i], i, a, seed, fast_path);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Earliest successful sweep step wins; ties go to the lowest machine index.
  const MachineReport* winner = nullptr;
  for (const auto& machine : outcome.machines) {
    if (!machine.sweep.found) continue;
    if (!winner || machine.sweep.attempts.size() < winner->sweep.attempts.size()) winner = &machine;
  }
  if (winner) record_win(outcome, *winner);
  finalize(outcome);
  return outcome;
}

QueryBounds worst_case_query_bound(int n, int k, std::uint64_t a) {
  const DecompositionPlan plan = plan_decomposition(n, k);
  const std::uint64_t t_a = threshold_t_a(a);
  const std::uint64_t grover_full = grover_iterations(plan.sub_arity, 1);
  const std::uint64_t counting = nominal_counting_queries(plan.sub_arity);
  QueryBounds bounds;
  bounds.serial = (2 * t_a + 1) * grover_full + plan.machine_count * counting + 2 * t_a + 1;
  bounds.parallel = (2 * t_a + 1) * grover_full + counting + 2 * t_a + 1;
  if (a == 1) bounds.parallel_fast_path = grover_full;
  bounds.serial_stated =
      static_cast<double>(grover_full) +
      static_cast<double>(plan.machine_count - 1) * (4.0 * std::sqrt(std::ldexp(1.0, plan.sub_arity)) - 1.0);
  return bounds;
}

const char* to_string(DistStatus status) { return status == DistStatus::found ? "found" : "not_found"; }

}  // namespace dgrover
