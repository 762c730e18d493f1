#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dgrover {

// A literal is a signed 1-based variable index: +j means x_j, -j means NOT x_j.
using Literal = int;
using Clause = std::vector<Literal>;

// Variable x_j maps to qubit j-1, i.e. bit (n - j) of an n-bit assignment
// index. An assignment bit string lists x_1 ... x_n left to right.
struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  // Set when the formula contains an empty clause; it is then false
  // everywhere and `clauses` is cleared.
  bool constant_false = false;

  // Clause count before tautologies were dropped (the header's m for parsed
  // input).
  int declared_clause_count = 0;

  std::vector<std::string> warnings;

  int clause_count() const noexcept { return static_cast<int>(clauses.size()); }
  bool is_constant_true() const noexcept { return !constant_false && clauses.empty(); }
  bool is_constant_false() const noexcept { return constant_false; }

  // Conjunction of clauses at the assignment with index `assignment`.
  bool evaluate(std::uint64_t assignment) const;
};

// Parses DIMACS CNF: `c` comment lines, one `p cnf <n> <m>` header, then
// 0-terminated clauses (which may span lines). A line starting with `%` ends
// the clause section. Duplicate literals are merged and tautological clauses
// dropped with a warning. Throws parse_error with the offending line.
CnfFormula parse_dimacs(std::string_view text);

// Inverse of parse_dimacs for normalized formulas.
std::string to_dimacs(const CnfFormula& formula);

// Removes duplicate literals; returns false when the clause is a tautology.
bool normalize_clause(Clause& clause);

// True iff every literal of `clause` is false under `assignment`.
bool clause_is_false(const Clause& clause, int variable_count, std::uint64_t assignment);

// Bit-string form: assignment[j-1] is x_j. Throws argument_error when a literal
// refers past the end of the assignment or a character is not 0/1.
bool clause_is_false(const Clause& clause, std::string_view assignment);

// Fixes the last k variables x_{n-k+1..n} to `suffix` (k bits, most
// significant = x_{n-k+1}) and simplifies: satisfied clauses are dropped and
// falsified literals removed. The result ranges over x_1..x_{n-k}; indices of
// surviving literals are unchanged. An emptied clause yields a constant-false
// formula; no remaining clauses yields constant-true.
CnfFormula restrict_cnf(const CnfFormula& formula, int suffix_bits, std::uint64_t suffix);

}  // namespace dgrover
