#include "dgrover/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "dgrover/errors.hpp"

namespace dgrover {

namespace {

bool literal_is_true(Literal lit, int variable_count, std::uint64_t assignment) {
  const int var = std::abs(lit);
  const bool value = ((assignment >> (variable_count - var)) & 1U) != 0;
  return lit > 0 ? value : !value;
}

std::string clause_text(const Clause& clause) {
  std::string out;
  for (Literal lit : clause) out += std::to_string(lit) + " ";
  return out + "0";
}

}  // namespace

bool CnfFormula::evaluate(std::uint64_t assignment) const {
  if (constant_false) return false;
  for (const auto& clause : clauses) {
    if (clause_is_false(clause, variable_count, assignment)) return false;
  }
  return true;
}

bool normalize_clause(Clause& clause) {
  Clause out;
  out.reserve(clause.size());
  for (Literal lit : clause) {
    if (std::find(out.begin(), out.end(), -lit) != out.end()) return false;
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  clause = std::move(out);
  return true;
}

bool clause_is_false(const Clause& clause, int variable_count, std::uint64_t assignment) {
  for (Literal lit : clause) {
    if (literal_is_true(lit, variable_count, assignment)) return false;
  }
  return true;
}

bool clause_is_false(const Clause& clause, std::string_view assignment) {
  if (assignment.find_first_not_of("01") != std::string_view::npos) {
    throw argument_error("assignment must contain only 0 and 1");
  }
  for (Literal lit : clause) {
    const std::size_t var = static_cast<std::size_t>(std::abs(lit));
    if (var == 0 || var > assignment.size()) {
      throw argument_error("literal " + std::to_string(lit) + " outside an assignment of length " +
                           std::to_string(assignment.size()));
    }
    const bool value = assignment[var - 1] == '1';
    if (lit > 0 ? value : !value) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula formula;
  bool have_header = false;
  int declared = 0;
  int clauses_seen = 0;
  Clause current;
  std::size_t clause_start_line = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool clause_section_done = false;

  auto finish_clause = [&](std::size_t line) {
    ++clauses_seen;
    if (current.empty()) {
      formula.constant_false = true;
      formula.warnings.push_back("line " + std::to_string(line) +
                                 ": empty clause, formula is constant false");
    } else {
      Clause original = current;
      if (normalize_clause(current)) {
        formula.clauses.push_back(std::move(current));
      } else {
        formula.warnings.push_back("line " + std::to_string(line) + ": dropped tautological clause " +
                                   clause_text(original));
      }
    }
    current.clear();
  };

  while (pos <= text.size() && !clause_section_done) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line.front() == 'c') continue;
    if (line.front() == '%') {
      clause_section_done = true;
      break;
    }
    if (line.front() == 'p') {
      if (have_header) throw parse_error(line_no, "duplicate problem line");
      std::istringstream in{std::string(line)};
      std::string p, fmt;
      long n = -1, m = -1;
      std::string extra;
      if (!(in >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 1 || m < 0 || (in >> extra)) {
        throw parse_error(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
      }
      formula.variable_count = static_cast<int>(n);
      declared = static_cast<int>(m);
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(line_no, "clause data before 'p cnf' header");

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      const std::string_view token = line.substr(i, j - i);
      long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw parse_error(line_no, "invalid literal '" + std::string(token) + "'");
      }
      if (value == 0) {
        finish_clause(line_no);
      } else {
        if (std::labs(value) > formula.variable_count) {
          throw parse_error(line_no, "literal " + std::to_string(value) + " exceeds variable count " +
                                         std::to_string(formula.variable_count));
        }
        if (current.empty()) clause_start_line = line_no;
        current.push_back(static_cast<Literal>(value));
      }
      i = j;
    }
  }

  if (!have_header) throw parse_error(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!current.empty()) throw parse_error(clause_start_line, "unterminated clause (missing trailing 0)");
  if (clauses_seen != declared) {
    throw parse_error(0, "header declares " + std::to_string(declared) + " clauses but " +
                             std::to_string(clauses_seen) + " present");
  }
  formula.declared_clause_count = declared;
  if (formula.constant_false) formula.clauses.clear();
  return formula;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.variable_count) + " " +
                    std::to_string(formula.constant_false ? 1 : formula.clause_count()) + "\n";
  if (formula.constant_false) return out + "0\n";
  for (const auto& clause : formula.clauses) out += clause_text(clause) + "\n";
  return out;
}

CnfFormula restrict_cnf(const CnfFormula& formula, int suffix_bits, std::uint64_t suffix) {
  const int n = formula.variable_count;
  if (suffix_bits < 1 || suffix_bits >= n) {
    throw argument_error("suffix length must satisfy 1 <= k < n");
  }
  const int kept = n - suffix_bits;
  CnfFormula out;
  out.variable_count = kept;
  out.constant_false = formula.constant_false;
  if (formula.constant_false) return out;

  for (const auto& clause : formula.clauses) {
    Clause reduced;
    bool satisfied = false;
    for (Literal lit : clause) {
      const int var = std::abs(lit);
      if (var <= kept) {
        reduced.push_back(lit);
        continue;
      }
      const bool value = ((suffix >> (n - var)) & 1U) != 0;
      if (lit > 0 ? value : !value) {
        satisfied = true;
        break;
      }
    }
    if (satisfied) continue;
    if (reduced.empty()) {
      out.constant_false = true;
      out.clauses.clear();
      break;
    }
    out.clauses.push_back(std::move(reduced));
  }
  out.declared_clause_count = out.clause_count();
  return out;
}

}  // namespace dgrover
