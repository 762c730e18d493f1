#include "dgrover/distributed.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dgrover/errors.hpp"
#include "dgrover/seeding.hpp"
#include "test_support.hpp"

using namespace dgrover;

namespace {

// Truth table of arity n whose solutions are exactly `marked`.
BooleanFunction marking(int n, std::initializer_list<std::uint64_t> marked) {
  std::vector<bool> values(std::size_t{1} << n);
  for (auto x : marked) values[x] = true;
  return BooleanFunction::from_truth_table(std::move(values));
}

std::uint64_t pi4_sqrt(int s) {
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi / 4 * std::sqrt(std::ldexp(1.0, s))));
}

}  // namespace

TEST(Decompose, Plan) {
  const auto plan = plan_decomposition(5, 2);
  EXPECT_EQ(plan.sub_arity, 3);
  EXPECT_EQ(plan.machine_count, 4u);
  EXPECT_EQ(plan.suffix(2), "10");
  EXPECT_EQ(plan.join(0b101, 0b10), 0b10110u);
  EXPECT_THROW(plan_decomposition(5, 0), argument_error);
  EXPECT_THROW(plan_decomposition(5, 5), argument_error);
}

TEST(Decompose, SuffixInLowBits) {
  const auto f = BooleanFunction::from_truth_table("01101100");
  const auto parts = decompose(f, 1);
  ASSERT_EQ(parts.size(), 2u);
  for (std::uint64_t x = 0; x < 4; ++x) {
    EXPECT_EQ(parts[0].value_at(x), f.value_at(x << 1));
    EXPECT_EQ(parts[1].value_at(x), f.value_at((x << 1) | 1));
  }
  const auto quarters = decompose(f, 2);
  ASSERT_EQ(quarters.size(), 4u);
  for (const auto& q : quarters) EXPECT_EQ(q.arity(), 1);
}

TEST(Decompose, CountConservation) {
  for (int n = 2; n <= 12; ++n) {
    const auto f = testkit::random_function(n, (std::uint64_t{1} << n) / 5 + 1, static_cast<std::uint64_t>(n));
    for (int k = 1; k < n; ++k) {
      std::uint64_t sum = 0;
      for (const auto& part : decompose(f, k)) sum += solution_count(part);
      EXPECT_EQ(sum, solution_count(f)) << n << " " << k;
    }
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold_t_a(1), 18u);
  EXPECT_EQ(threshold_t_a(4), 24u);
  EXPECT_EQ(threshold_t_a(16), 37u);
  EXPECT_THROW(threshold_t_a(0), argument_error);
}

TEST(CandidateWindow, Arithmetic) {
  const auto w = candidate_window(1, 1, 6);
  ASSERT_EQ(w.candidates.size(), 19u);
  EXPECT_EQ(w.candidates.front(), 1u);
  EXPECT_EQ(w.candidates.back(), 19u);
  EXPECT_FALSE(w.is_constant_zero);

  const auto zero = candidate_window(0, 1, 6);
  EXPECT_TRUE(zero.candidates.empty());
  EXPECT_TRUE(zero.is_constant_zero);

  const auto full = candidate_window(16, 1, 4);
  EXPECT_EQ(full.candidates.size(), 16u);

  const auto mid = candidate_window(100, 1, 8);
  EXPECT_EQ(mid.candidates.front(), 82u);
  EXPECT_EQ(mid.candidates.back(), 118u);
}

TEST(CandidateWindow, Properties) {
  for (int s = 1; s <= 10; ++s) {
    const std::uint64_t N = std::uint64_t{1} << s;
    for (std::uint64_t a : {1u, 2u, 5u, 30u}) {
      for (std::uint64_t e = 0; e <= N; ++e) {
        const auto w = candidate_window(e, a, s);
        EXPECT_LE(w.candidates.size(), 2 * w.t_a + 1);
        EXPECT_EQ(w.candidates.empty(), e == 0);
        for (std::size_t i = 0; i < w.candidates.size(); ++i) {
          EXPECT_GE(w.candidates[i], 1u);
          EXPECT_LE(w.candidates[i], N);
          if (i) EXPECT_EQ(w.candidates[i], w.candidates[i - 1] + 1);
        }
      }
    }
  }
}

TEST(CandidateSet, CertainCases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    QueryLedger ledger;
    const auto none = build_candidate_set(BooleanFunction::constant(4, false), 1, seed, ledger);
    EXPECT_TRUE(none.is_constant_zero);
    EXPECT_TRUE(none.candidates.empty());
    EXPECT_EQ(none.estimate, 0u);

    const auto all = build_candidate_set(BooleanFunction::constant(4, true), 1, seed, ledger);
    EXPECT_EQ(all.estimate, 16u);
    EXPECT_EQ(all.candidates.front(), 1u);
    EXPECT_EQ(all.candidates.back(), 16u);
    EXPECT_EQ(ledger.quantum_queries(), 6u);  // grid 4: three queries per run
  }
}

TEST(Sweep, OrderIsDescendingUnique) {
  EXPECT_EQ(sweep_order({3, 1, 2, 3}), (std::vector<std::uint64_t>{3, 2, 1}));
}

TEST(Sweep, ExactCaseFindsOnFirstMatchingCandidate) {
  const auto f = marking(2, {1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryLedger ledger;
    const auto r = sweep_candidates(f, {1}, seed, ledger);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.found->measured, 1u);
    EXPECT_EQ(ledger.quantum_queries(), 1u);
    EXPECT_EQ(ledger.classical_queries(), 1u);
  }
}

TEST(Sweep, ChargesIterationsOfEachAttempt) {
  QueryLedger ledger;
  const auto r = sweep_candidates(BooleanFunction::constant(6, false), {1, 2, 3}, 0, ledger);
  EXPECT_FALSE(r.found);
  ASSERT_EQ(r.attempts.size(), 3u);
  EXPECT_EQ(r.attempts[0].assumed_count, 3u);
  EXPECT_EQ(r.attempts[2].iterations, 6u);
  EXPECT_EQ(ledger.quantum_queries(), grover_iterations(6, 1) + grover_iterations(6, 2) + grover_iterations(6, 3));
  EXPECT_EQ(ledger.classical_queries(), 3u);
}

TEST(Sweep, AttemptSeedsFollowDerivation) {
  const auto f = testkit::random_function(6, 3, 1);
  QueryLedger l1, l2;
  const auto r = sweep_candidates(f, {9, 8, 7}, 77, l1);
  const auto direct = run_grover(f, 9, mix_seed(77, 1), l2);
  EXPECT_EQ(r.attempts[0].measured, direct.measured);
}

TEST(Serial, SolutionInFirstBlockLeavesOthersUntouched) {
  // n = 6, k = 2: machine 0 owns the inputs ending in 00. Its single solution
  // often yields a zero estimate, in which case the run moves on; whenever
  // the estimate is non-zero, machine 0 decides the run alone.
  const auto f = marking(6, {0b101100});
  int decided_by_zero = 0;
  int found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto out = run_serial(f, 2, 1, seed);
    ASSERT_TRUE(out.machines[0].ran);
    if (out.machines[0].candidates->is_constant_zero) {
      EXPECT_TRUE(out.stopped_machine_had_solutions);
      continue;
    }
    ++decided_by_zero;
    for (std::size_t i = 1; i < 4; ++i) {
      EXPECT_FALSE(out.machines[i].ran);
      EXPECT_EQ(out.machines[i].ledger.total(), 0u);
    }
    if (out.status == DistStatus::found) {
      ++found;
      EXPECT_EQ(out.solution, 0b101100u);
      EXPECT_EQ(out.solution_bits, "101100");
      EXPECT_EQ(out.found_by_machine, 0);
    }
  }
  EXPECT_GT(decided_by_zero, 0);
  EXPECT_GT(found, 0);
}

// After the first machine with a non-empty window nothing else runs.
TEST(Serial, StopsAtFirstNonEmptyWindow) {
  const auto f = testkit::random_function(7, 6, 3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto out = run_serial(f, 2, 6, seed);
    bool decided = false;
    for (const auto& m : out.machines) {
      if (decided) {
        EXPECT_FALSE(m.ran);
        continue;
      }
      ASSERT_TRUE(m.ran);
      decided = !m.candidates->is_constant_zero;
      if (decided && out.status == DistStatus::found) {
        EXPECT_EQ(out.found_by_machine, static_cast<std::int64_t>(m.index));
      }
    }
    if (!decided) EXPECT_EQ(out.status, DistStatus::not_found);
  }
}

TEST(Serial, SolutionsInLastBlockChargeEveryCounting) {
  const int n = 8;
  const int k = 2;
  const auto f = marking(n, {0b01101011, 0b11000011});
  const std::uint64_t grid = counting_grid_for(n - k);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto out = run_serial(f, k, 2, seed);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& m = out.machines[i];
      ASSERT_TRUE(m.ran);
      EXPECT_TRUE(m.candidates->is_constant_zero);
      EXPECT_EQ(m.ledger.quantum_queries(), grid - 1);
      EXPECT_EQ(m.ledger.classical_queries(), 0u);
    }
    EXPECT_EQ(out.machines[3].ledger.phase(phase::counting).quantum, grid - 1);
    std::uint64_t counting = 0;
    for (const auto& m : out.machines) counting += m.ledger.phase(phase::counting).quantum;
    EXPECT_EQ(counting, 4 * (grid - 1));
    EXPECT_EQ(out.stopped_machine_had_solutions, out.machines[3].candidates->is_constant_zero);
    if (out.status == DistStatus::found) EXPECT_TRUE(f.value_at(out.solution));
  }
}

TEST(Serial, ConstantOneFindsOnMachineZero) {
  const auto f = BooleanFunction::constant(6, true);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto out = run_serial(f, 1, 64, seed);
    ASSERT_EQ(out.status, DistStatus::found);
    EXPECT_EQ(out.found_by_machine, 0);
    EXPECT_EQ(out.solution % 2, 0u);
    EXPECT_EQ(out.machines[0].sweep.attempts.size(), 1u);
  }
}

TEST(Serial, RejectsZeroCount) {
  EXPECT_THROW(run_serial(BooleanFunction::constant(4, true), 1, 0, 0), argument_error);
}

TEST(Parallel, FastPathChargesOneGroverRunPerMachine) {
  for (int n : {8, 10}) {
    for (int k : {1, 2, 3}) {
      const auto f = testkit::random_function(n, 1, static_cast<std::uint64_t>(n * 10 + k));
      const auto out = run_parallel(f, k, 1, 3);
      ASSERT_EQ(out.machines.size(), std::size_t{1} << k);
      for (const auto& m : out.machines) {
        EXPECT_TRUE(m.fast_path);
        EXPECT_FALSE(m.candidates.has_value());
        EXPECT_EQ(m.ledger.quantum_queries(), pi4_sqrt(n - k));
        EXPECT_EQ(m.ledger.classical_queries(), 1u);
      }
      EXPECT_EQ(*worst_case_query_bound(n, k, 1).parallel_fast_path, pi4_sqrt(n - k));
    }
  }
}

TEST(Parallel, WithoutFastPathEveryMachineCounts) {
  const auto f = testkit::random_function(8, 1, 4);
  DistOptions options;
  options.fast_path_a1 = false;
  const auto out = run_parallel(f, 2, 1, 3, options);
  for (const auto& m : out.machines) {
    ASSERT_TRUE(m.candidates.has_value());
    EXPECT_EQ(m.ledger.phase(phase::counting).quantum, counting_grid_for(6) - 1);
  }
}

TEST(Parallel, LowestIndexWinsTies) {
  // Both halves hold a single solution at sub-arity 2, found with certainty
  // on the first attempt of the fast path.
  const auto f = marking(3, {0b010, 0b111});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto out = run_parallel(f, 1, 1, seed);
    ASSERT_EQ(out.status, DistStatus::found);
    EXPECT_EQ(out.found_by_machine, 0);
    EXPECT_EQ(out.solution, 0b010u);
    EXPECT_TRUE(out.machines[1].sweep.found);
  }
}

TEST(Parallel, ZeroBlockStopsAfterCounting) {
  const auto f = marking(6, {0b000001, 0b010011});
  const auto out = run_parallel(f, 1, 2, 5);
  const auto& zero = out.machines[0];
  EXPECT_TRUE(zero.candidates->is_constant_zero);
  EXPECT_EQ(zero.ledger.quantum_queries(), counting_grid_for(5) - 1);
  EXPECT_TRUE(zero.sweep.attempts.empty());
}

TEST(Parallel, ThreadCountDoesNotChangeOutcome) {
  const auto f = testkit::random_function(9, 5, 8);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    DistOptions one;
    one.threads = 1;
    DistOptions four;
    four.threads = 4;
    const auto a = run_parallel(f, 3, 5, seed, one);
    const auto b = run_parallel(f, 3, 5, seed, four);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.solution, b.solution);
    EXPECT_EQ(a.found_by_machine, b.found_by_machine);
    for (std::size_t i = 0; i < a.machines.size(); ++i) EXPECT_EQ(a.machines[i].ledger, b.machines[i].ledger);
  }
}

TEST(Outcome, DeterministicPerSeed) {
  const auto f = testkit::random_function(8, 3, 2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s1 = run_serial(f, 2, 3, seed);
    const auto s2 = run_serial(f, 2, 3, seed);
    EXPECT_EQ(s1.status, s2.status);
    EXPECT_EQ(s1.solution, s2.solution);
    EXPECT_EQ(s1.quantum_queries, s2.quantum_queries);
    EXPECT_EQ(s1.classical_queries, s2.classical_queries);
  }
}

TEST(Bounds, SerialExample) {
  const auto b = worst_case_query_bound(5, 1, 1);
  EXPECT_EQ(b.serial, 156u);
  EXPECT_EQ(b.parallel, 37u * 3 + 4 + 37);
  EXPECT_EQ(*b.parallel_fast_path, 3u);
  EXPECT_NEAR(b.serial_stated, 3 + 1 * (4 * 4.0 - 1), 1e-12);
  EXPECT_FALSE(worst_case_query_bound(5, 1, 2).parallel_fast_path.has_value());
}

// Random instances: found implies a verified solution, depth <= total, and
// the ledgers stay within the worst-case expressions.
TEST(Bounds, RandomInstancesRespectBounds) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % std::min(3, n - 1));
    const std::uint64_t a = 1 + rng() % std::min<std::uint64_t>(8, std::uint64_t{1} << n);
    const auto f = testkit::random_function(n, a, rng());
    const auto bounds = worst_case_query_bound(n, k, a);
    const std::uint64_t seed = rng();

    const auto serial = run_serial(f, k, a, seed);
    EXPECT_LE(serial.serial_cost, bounds.serial);
    EXPECT_LE(serial.parallel_depth, serial.serial_cost);
    if (serial.status == DistStatus::found) EXPECT_TRUE(f.value_at(serial.solution));

    const auto parallel = run_parallel(f, k, a, seed);
    for (const auto& m : parallel.machines) {
      EXPECT_LE(m.ledger.total(), bounds.parallel);
      if (m.fast_path) EXPECT_EQ(m.ledger.quantum_queries(), *bounds.parallel_fast_path);
    }
    EXPECT_LE(parallel.parallel_depth, parallel.serial_cost);
    if (parallel.status == DistStatus::found) EXPECT_TRUE(f.value_at(parallel.solution));
    EXPECT_EQ(parallel.quantum_queries + parallel.classical_queries, parallel.serial_cost);
  }
}

TEST(Outcome, FlagsStoppedMachineWithSolutions) {
  // A machine with one solution in 2^7 entries gives a zero estimate most of
  // the time; the harness flag must track that against ground truth.
  const auto f = testkit::random_function(8, 1, 12);
  int flagged = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DistOptions options;
    options.fast_path_a1 = false;
    const auto out = run_parallel(f, 1, 1, seed, options);
    bool expected = false;
    for (const auto& m : out.machines) expected = expected || (m.candidates->is_constant_zero && m.true_solution_count > 0);
    EXPECT_EQ(out.stopped_machine_had_solutions, expected);
    flagged += expected ? 1 : 0;
  }
  EXPECT_GT(flagged, 0);
}
