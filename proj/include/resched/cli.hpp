#pragma once

#include <iosfwd>

namespace resched {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      // usage, I/O or contract error
    kExitInfeasible = 2,
    kExitVerifyFailed = 3,
};

/// Entry point for the `resched` tool: solve, gen, verify, oracle, bench.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace resched
