#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dgrover/amplitude_estimation.hpp"
#include "dgrover/boolean_function.hpp"
#include "dgrover/distributed.hpp"
#include "dgrover/elementary.hpp"
#include "dgrover/errors.hpp"
#include "dgrover/grover.hpp"
#include "dgrover/oracle_circuit.hpp"

namespace dgrover::cli {
namespace {

using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string input;
  std::string format;
  std::uint64_t seed = 0;
  std::string json_path;
};

struct Loaded {
  BooleanFunction f;
  std::optional<CnfFormula> cnf;
  json descriptor;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read input file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string resolve_format(const CommonOptions& common) {
  if (!common.format.empty()) return common.format;
  const auto dot = common.input.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : common.input.substr(dot);
  return ext == ".cnf" || ext == ".dimacs" ? "dimacs" : "table";
}

Loaded load(const CommonOptions& common, std::string oracle, std::ostream& err) {
  const std::string text = read_file(common.input);
  const std::string format = resolve_format(common);
  json desc;
  desc["path"] = common.input;
  desc["format"] = format;
  desc["fnv1a64"] = fnv1a64(text);

  if (format == "table") {
    if (!oracle.empty() && oracle != "table") throw usage_error("--oracle " + oracle + " needs DIMACS input");
    Loaded loaded{parse_truth_table(text), std::nullopt, {}};
    desc["n"] = loaded.f.arity();
    desc["oracle"] = "table";
    loaded.descriptor = std::move(desc);
    return loaded;
  }

  CnfFormula cnf = parse_dimacs(text);
  for (const auto& w : cnf.warnings) err << "dgrover: warning: " << w << '\n';
  if (oracle.empty()) oracle = "cnf";
  desc["n"] = cnf.variable_count;
  desc["clauses"] = cnf.clause_count();
  desc["declared_clauses"] = cnf.declared_clause_count;
  desc["warnings"] = cnf.warnings;

  std::optional<BooleanFunction> f;
  if (cnf.is_constant_false() || cnf.is_constant_true()) {
    // Nothing to compile; the oracle is a global phase.
    f = BooleanFunction::constant(cnf.variable_count, cnf.is_constant_true());
    oracle = "constant";
  } else if (oracle == "cnf") {
    f = BooleanFunction::from_cnf(cnf);
  } else if (oracle == "table") {
    f = BooleanFunction::from_truth_table(BooleanFunction::from_cnf(cnf).to_truth_table());
  } else if (oracle == "compiled") {
    f = BooleanFunction::from_circuit(compile_phase_oracle(cnf));
  } else {
    throw usage_error("unknown oracle '" + oracle + "'");
  }
  desc["oracle"] = oracle;
  return Loaded{*f, std::move(cnf), std::move(desc)};
}

json ledger_json(const QueryLedger& ledger) {
  json phases = json::object();
  for (const auto& [name, counts] : ledger.breakdown()) {
    phases[name] = {{"quantum", counts.quantum}, {"classical", counts.classical}};
  }
  return {{"quantum", ledger.quantum_queries()},
          {"classical", ledger.classical_queries()},
          {"total", ledger.total()},
          {"phases", phases}};
}

json attempts_json(const SweepResult& sweep, int arity) {
  json out = json::array();
  for (const auto& a : sweep.attempts) {
    out.push_back({{"assumed_count", a.assumed_count},
                   {"iterations", a.iterations},
                   {"measured", to_bit_string(a.measured, arity)},
                   {"success", a.success}});
  }
  return out;
}

json machine_json(const MachineReport& m, int sub_arity) {
  json j;
  j["index"] = m.index;
  j["seed"] = m.seed;
  j["ran"] = m.ran;
  if (!m.ran) return j;
  j["fast_path"] = m.fast_path;
  if (m.candidates) {
    const auto& c = *m.candidates;
    j["estimate"] = c.estimate;
    j["y"] = c.counting ? c.counting->y : 0;
    j["t_a"] = c.t_a;
    j["zero_estimate"] = c.is_constant_zero;
    j["window"] = c.candidates.empty() ? json(nullptr)
                                       : json::array({c.candidates.front(), c.candidates.back()});
  }
  j["attempts"] = attempts_json(m.sweep, sub_arity);
  j["found"] = m.sweep.found.has_value();
  j["ledger"] = ledger_json(m.ledger);
  j["harness"] = {{"true_solution_count", m.true_solution_count}};
  return j;
}

json cmd_grover(const Loaded& in, const CommonOptions& common, std::uint64_t a) {
  const int n = in.f.arity();
  const GroverPlan plan = plan_grover(n, a);
  QueryLedger ledger;
  const GroverOutcome out = run_grover(in.f, a, common.seed, ledger);

  const std::uint64_t t = solution_count(in.f);
  double exact = 0.0;
  if (n <= 20) {
    const auto d = grover_distribution(in.f, a);
    for (std::uint64_t x = 0; x < d.size(); ++x) {
      if (in.f.value_at(x)) exact += d[x];
    }
  }
  json r;
  r["parameters"] = {{"n", n}, {"a", a}, {"seed", common.seed}};
  r["outcome"] = {{"measured", out.measured_bits},
                  {"is_solution", out.is_solution},
                  {"iterations", out.iterations},
                  {"predicted_success", plan.predicted_success}};
  r["ledger"] = ledger_json(ledger);
  r["bounds"] = {{"grover_iterations", plan.iterations}};
  r["harness"] = {{"true_solution_count", t}};
  if (n <= 20) r["harness"]["exact_success_probability"] = exact;
  return r;
}

json cmd_count(const Loaded& in, const CommonOptions& common, std::optional<std::uint64_t> grid_opt) {
  const int n = in.f.arity();
  const std::uint64_t grid = grid_opt ? *grid_opt : counting_grid_for(n);
  QueryLedger ledger;
  const CountEstimate e = run_count(in.f, grid, common.seed, ledger);
  const int m = std::countr_zero(grid);

  const std::uint64_t t = solution_count(in.f);
  const double error = std::abs(e.t_prime - static_cast<double>(t));
  const double sqrt_grid = sqrt_grid_error_bound(t, n);
  const double finite_grid = count_error_bound(t, n, m);

  json r;
  r["parameters"] = {{"n", n}, {"grid", grid}, {"m", m}, {"seed", common.seed}};
  r["outcome"] = {{"y", e.y},
                  {"a_tilde", e.a_tilde},
                  {"t_prime", e.t_prime},
                  {"t_prime_rounded", e.t_prime_rounded}};
  r["ledger"] = ledger_json(ledger);
  r["bounds"] = {{"sqrt_grid_error_bound", sqrt_grid},
                 {"count_error_bound_k1", finite_grid},
                 {"confidence_k1", estimation_confidence(1)},
                 {"nominal_queries", nominal_counting_queries(n)},
                 {"charged_queries", grid - 1}};
  r["harness"] = {{"true_solution_count", t},
                  {"abs_error", error},
                  {"within_sqrt_grid_bound", error <= sqrt_grid},
                  {"within_count_bound", error <= finite_grid}};
  return r;
}

json cmd_dist(const Loaded& in, const CommonOptions& common, bool parallel, int k, std::uint64_t a,
              bool fast_a1, unsigned threads) {
  const int n = in.f.arity();
  if (k < 1 || k >= n) throw usage_error("--k must satisfy 1 <= k < n (n=" + std::to_string(n) + ")");
  DistOptions options;
  options.fast_path_a1 = fast_a1;
  options.threads = threads;
  const DistOutcome out = parallel ? run_parallel(in.f, k, a, common.seed, options)
                                   : run_serial(in.f, k, a, common.seed);
  const QueryBounds bounds = worst_case_query_bound(n, k, a);

  json machines = json::array();
  for (const auto& m : out.machines) machines.push_back(machine_json(m, out.plan.sub_arity));

  json r;
  r["parameters"] = {{"n", n},
                     {"k", k},
                     {"a", a},
                     {"seed", common.seed},
                     {"mode", parallel ? "parallel" : "serial"},
                     {"fast_path_a1", parallel && fast_a1 && a == 1}};
  r["outcome"] = {{"status", to_string(out.status)},
                  {"solution", out.status == DistStatus::found ? json(out.solution_bits) : json(nullptr)},
                  {"found_by_machine", out.found_by_machine},
                  {"machines", machines}};
  r["ledger"] = {{"quantum", out.quantum_queries},
                 {"classical", out.classical_queries},
                 {"serial_cost", out.serial_cost},
                 {"parallel_depth", out.parallel_depth}};
  json b = {{"serial", bounds.serial},
            {"parallel", bounds.parallel},
            {"serial_stated", bounds.serial_stated}};
  if (bounds.parallel_fast_path) b["parallel_fast_path"] = *bounds.parallel_fast_path;
  r["bounds"] = b;
  std::uint64_t per_machine_max = 0;
  for (const auto& m : out.machines) per_machine_max = std::max(per_machine_max, m.ledger.quantum_queries());
  r["comparison"] = {{"parallel_depth", out.parallel_depth},
                     {"max_machine_quantum_queries", per_machine_max},
                     {"single_machine_grover_quantum_queries", grover_iterations(n, a)}};
  r["harness"] = {{"true_solution_count", solution_count(in.f)},
                  {"stopped_machine_had_solutions", out.stopped_machine_had_solutions}};
  return r;
}

json cmd_compile(const Loaded& in, const std::string& out_path, bool elementary) {
  if (!in.cnf) throw usage_error("compile needs DIMACS input");
  const CircuitIR ir = compile_phase_oracle(*in.cnf);
  {
    std::ofstream file(out_path);
    if (!file) throw input_error("cannot write '" + out_path + "'");
    file << to_text(ir);
  }
  const std::size_t m = static_cast<std::size_t>(ir.clause_count);
  const std::size_t M = static_cast<std::size_t>(ir.counter_qubits);
  json r;
  r["parameters"] = {{"n", ir.input_qubits}, {"out", out_path}, {"elementary", elementary}};
  r["outcome"] = {{"clauses", ir.clause_count},
                  {"counter_width", ir.counter_qubits},
                  {"ir_blocks", gate_count(ir, false)},
                  {"ir_gates", ir.flat_gates().size()},
                  {"palindromic", is_palindromic(ir)}};
  json b = {{"m_log_m", m * M}, {"constant", kElementaryGateConstant}};
  if (elementary) {
    const ElementaryCircuit ec = expand_elementary(ir);
    r["outcome"]["elementary_gates"] = ec.gates.size();
    r["outcome"]["ancilla_qubits"] = ec.ancilla_qubits;
    b["elementary_bound"] = kElementaryGateConstant * m * M;
    b["within_bound"] = ec.gates.size() <= kElementaryGateConstant * m * M;
  }
  r["bounds"] = b;
  return r;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--input", common.input, "Truth-table or DIMACS file")->required();
  cmd->add_option("--format", common.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"table", "dimacs"}));
  cmd->add_option("--seed", common.seed, "Random seed");
  cmd->add_option("--json", common.json_path, "Also append the report to this file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed Grover search simulator", "dgrover"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string oracle;
  std::uint64_t a = 0;
  std::optional<std::uint64_t> grid;
  int k = 0;
  bool fast_a1 = true;
  unsigned threads = 0;
  std::string out_path;
  bool elementary = false;

  auto* grover = app.add_subcommand("grover", "Single-machine Grover search");
  add_common(grover, common);
  grover->add_option("--a", a, "Assumed number of solutions")->required()->check(CLI::PositiveNumber);
  grover->add_option("--oracle", oracle, "Oracle backend")->check(CLI::IsMember({"table", "cnf", "compiled"}));

  auto* count = app.add_subcommand("count", "Quantum counting");
  add_common(count, common);
  count->add_option("--grid", grid, "Grid size 2^m (default: smallest power of two >= sqrt(2^n))");
  count->add_option("--oracle", oracle, "Oracle backend")->check(CLI::IsMember({"table", "cnf", "compiled"}));

  CLI::App* dist[2];
  const char* names[2] = {"dist-serial", "dist-parallel"};
  for (int i = 0; i < 2; ++i) {
    dist[i] = app.add_subcommand(names[i], i ? "Parallel distributed search" : "Serial distributed search");
    add_common(dist[i], common);
    dist[i]->add_option("--k", k, "Split into 2^k machines")->required();
    dist[i]->add_option("--a", a, "Number of solutions of f")->required()->check(CLI::PositiveNumber);
    dist[i]->add_option("--oracle", oracle, "Oracle backend")->check(CLI::IsMember({"table", "cnf", "compiled"}));
  }
  dist[1]->add_flag("--fast-a1,!--no-fast-a1", fast_a1, "Skip counting when a = 1 (default on)");
  dist[1]->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  auto* compile = app.add_subcommand("compile", "Compile a DIMACS formula into a phase-oracle circuit");
  add_common(compile, common);
  compile->add_option("--out", out_path, "Where to write the circuit text")->required();
  compile->add_flag("--elementary", elementary, "Also expand into X/Z/CX/CCX gates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const auto* cmd = app.get_subcommands().front();
  try {
    const auto start = std::chrono::steady_clock::now();
    const Loaded in = load(common, cmd == compile ? "" : oracle, err);
    json body;
    if (cmd == grover) {
      body = cmd_grover(in, common, a);
    } else if (cmd == count) {
      body = cmd_count(in, common, grid);
    } else if (cmd == dist[0] || cmd == dist[1]) {
      body = cmd_dist(in, common, cmd == dist[1], k, a, fast_a1, threads);
    } else {
      body = cmd_compile(in, out_path, elementary);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report;
    report["schema"] = kReportSchema;
    report["command"] = cmd->get_name();
    json args = json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    report["argv"] = args;
    report["input"] = in.descriptor;
    for (auto& [key, value] : body.items()) report[key] = value;
    report["wall_clock_ms"] = std::round(elapsed * 1000.0) / 1000.0;

    const std::string line = report.dump();
    out << line << '\n';
    if (!common.json_path.empty()) {
      std::ofstream file(common.json_path, std::ios::app);
      if (!file) throw input_error("cannot write '" + common.json_path + "'");
      file << line << '\n';
    }
    return ExitCode::ok;
  } catch (const usage_error& e) {
    err << "dgrover: usage error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const parse_error& e) {
    err << "dgrover: parse error: " << e.what() << '\n';
    return ExitCode::input;
  } catch (const input_error& e) {
    err << "dgrover: input error: " << e.what() << '\n';
    return ExitCode::input;
  } catch (const constant_formula_error& e) {
    err << "dgrover: input error: " << e.what() << '\n';
    return ExitCode::input;
  } catch (const argument_error& e) {
    err << "dgrover: usage error: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const capacity_error& e) {
    err << "dgrover: capacity error: " << e.what() << '\n';
    return ExitCode::capacity;
  } catch (const std::exception& e) {
    err << "dgrover: internal error: " << e.what() << '\n';
    return ExitCode::internal;
  }
}

}  // namespace dgrover::cli
