#include "dgrover/cnf.hpp"

#include <gtest/gtest.h>

#include "dgrover/errors.hpp"
#include "test_support.hpp"

using namespace dgrover;

namespace {

CnfFormula formula(int n, std::vector<Clause> clauses) {
  CnfFormula f;
  f.variable_count = n;
  f.declared_clause_count = static_cast<int>(clauses.size());
  f.clauses = std::move(clauses);
  return f;
}

std::size_t error_line(std::string_view text) {
  try {
    parse_dimacs(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse_error for:\n" << text;
  return 0;
}

}  // namespace

TEST(ParseDimacs, SingleClause) {
  const auto f = parse_dimacs("p cnf 2 1\n1 -2 0");
  EXPECT_EQ(f.variable_count, 2);
  ASSERT_EQ(f.clause_count(), 1);
  EXPECT_EQ(f.clauses[0], (Clause{1, -2}));
  EXPECT_TRUE(f.warnings.empty());
}

TEST(ParseDimacs, CommentsAndMultilineClauses) {
  const auto f = parse_dimacs("c a comment\nc another\np cnf 3 2\n1\n-3 0 2\n3 0\n");
  ASSERT_EQ(f.clause_count(), 2);
  EXPECT_EQ(f.clauses[0], (Clause{1, -3}));
  EXPECT_EQ(f.clauses[1], (Clause{2, 3}));
}

TEST(ParseDimacs, PercentEndsInput) {
  const auto f = parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n");
  EXPECT_EQ(f.clause_count(), 1);
}

TEST(ParseDimacs, ClauseCountMismatch) {
  EXPECT_THROW(parse_dimacs("p cnf 3 3\n1 2 0\n-1 3 0\n"), parse_error);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n-1 3 0\n"), parse_error);
}

TEST(ParseDimacs, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("c only a comment\n1 2 0\n"), 2u);
  EXPECT_EQ(error_line("p cnf 2 1\n1 3 0\n"), 2u);
  EXPECT_EQ(error_line("p cnf 2 2\n1 0\n2 -1\n"), 3u);
  EXPECT_EQ(error_line("p cnf 2 1\n1 x 0\n"), 2u);
  EXPECT_EQ(error_line("p cnf 2 1\np cnf 2 1\n1 0\n"), 2u);
  EXPECT_EQ(error_line("p dnf 2 1\n1 0\n"), 1u);
  EXPECT_THROW(parse_dimacs(""), parse_error);
}

TEST(ParseDimacs, TautologyDroppedWithWarning) {
  const auto f = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n");
  EXPECT_EQ(f.clause_count(), 1);
  EXPECT_EQ(f.declared_clause_count, 2);
  ASSERT_EQ(f.warnings.size(), 1u);
  EXPECT_NE(f.warnings[0].find("tautolog"), std::string::npos);

  // Value unchanged on every assignment compared with the clause kept in.
  const auto kept = formula(2, {{1, -1}, {2}});
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(f.evaluate(x), testkit::cnf_value(kept, x));
}

TEST(ParseDimacs, DuplicateLiteralsMerged) {
  const auto f = parse_dimacs("p cnf 3 1\n2 2 -3 2 0\n");
  ASSERT_EQ(f.clause_count(), 1);
  EXPECT_EQ(f.clauses[0].size(), 2u);
}

TEST(ParseDimacs, EmptyClauseIsConstantFalse) {
  const auto f = parse_dimacs("p cnf 2 2\n1 0\n0\n");
  EXPECT_TRUE(f.is_constant_false());
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_FALSE(f.evaluate(x));
}

TEST(ParseDimacs, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto f = testkit::random_cnf(8, 12, 3, seed);
    const auto g = parse_dimacs(to_dimacs(f));
    EXPECT_EQ(g.variable_count, f.variable_count);
    for (std::uint64_t x = 0; x < 256; ++x) ASSERT_EQ(g.evaluate(x), testkit::cnf_value(f, x));
  }
}

TEST(Evaluate, MatchesClauseByClauseSemantics) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 8);
    const auto f = testkit::random_cnf(n, 3 + static_cast<int>(seed), 3, seed);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ASSERT_EQ(f.evaluate(x), testkit::cnf_value(f, x));
  }
  const auto wide = testkit::random_cnf(16, 40, 4, 99);
  for (std::uint64_t x = 0; x < (1u << 16); ++x) ASSERT_EQ(wide.evaluate(x), testkit::cnf_value(wide, x));
}

TEST(ClauseIsFalse, Examples) {
  const Clause c{1, -3, -4};
  EXPECT_TRUE(clause_is_false(c, "0011"));
  EXPECT_TRUE(clause_is_false(c, "0111"));
  EXPECT_FALSE(clause_is_false(c, "1011"));
  EXPECT_FALSE(clause_is_false(c, "0010"));
  EXPECT_FALSE(clause_is_false(Clause{2}, "01"));
  EXPECT_THROW(clause_is_false(c, "001"), argument_error);
  EXPECT_THROW(clause_is_false(c, ""), argument_error);
  EXPECT_THROW(clause_is_false(c, "0a11"), argument_error);
}

TEST(ClauseIsFalse, IndexAndStringFormsAgree) {
  const Clause c{1, -3, -4};
  for (std::uint64_t x = 0; x < 16; ++x) {
    std::string bits;
    for (int q = 3; q >= 0; --q) bits.push_back((x >> q) & 1 ? '1' : '0');
    EXPECT_EQ(clause_is_false(c, 4, x), clause_is_false(c, bits));
    const bool expected = ((x >> 3) & 1) == 0 && ((x >> 1) & 1) == 1 && (x & 1) == 1;
    EXPECT_EQ(clause_is_false(c, 4, x), expected);
  }
}

TEST(RestrictCnf, EmptiedClauseIsConstantFalse) {
  const auto f = formula(3, {{1, 3}, {-3}});
  const auto r = restrict_cnf(f, 1, 1);
  EXPECT_TRUE(r.is_constant_false());
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_FALSE(testkit::cnf_value(f, (x << 1) | 1));
}

TEST(RestrictCnf, SatisfiedFormulaIsConstantTrue) {
  const auto r = restrict_cnf(formula(3, {{1, 3}}), 1, 1);
  EXPECT_TRUE(r.is_constant_true());
  EXPECT_EQ(r.variable_count, 2);
}

TEST(RestrictCnf, DropsFalsifiedLiterals) {
  const auto r = restrict_cnf(formula(3, {{1, -2}, {-1, 3}}), 1, 0);
  EXPECT_EQ(r.variable_count, 2);
  ASSERT_EQ(r.clause_count(), 2);
  EXPECT_EQ(r.clauses[0], (Clause{1, -2}));
  EXPECT_EQ(r.clauses[1], (Clause{-1}));
}

TEST(RestrictCnf, EquivalentToFixingTheSuffix) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const auto f = testkit::random_cnf(n, 2 + static_cast<int>(seed % 9), 3, seed);
    for (int k = 1; k < n; ++k) {
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) {
        const auto r = restrict_cnf(f, k, y);
        ASSERT_EQ(r.variable_count, n - k);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (n - k)); ++x) {
          ASSERT_EQ(testkit::cnf_value(r, x), testkit::cnf_value(f, (x << k) | y))
              << "seed " << seed << " k " << k << " y " << y << " x " << x;
        }
      }
    }
  }
}

TEST(RestrictCnf, RejectsBadSuffixLength) {
  const auto f = formula(3, {{1, 3}});
  EXPECT_THROW(restrict_cnf(f, 0, 0), argument_error);
  EXPECT_THROW(restrict_cnf(f, 3, 0), argument_error);
}
