#pragma once

// Command-line front end. Each subcommand drives library operations and
// writes a JSON report with a "claims" array.

#include <ostream>

namespace tropgrass::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

/// Runs one subcommand. The report goes to `out` unless --output is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropgrass::cli
