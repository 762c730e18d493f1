#pragma once

#include <iosfwd>

namespace dgrover::cli {

inline constexpr const char* kReportSchema = "dgrover.report/1";

enum ExitCode : int { ok = 0, usage = 1, input = 2, capacity = 3, internal = 4 };

// Runs one subcommand. The JSON report goes to `out` as a single line,
// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dgrover::cli
