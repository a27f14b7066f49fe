#pragma once

#include <iosfwd>

namespace ppav {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    /// A sweep found a member violating its bound or identity.
    exit_check_failed = 1,
    exit_domain = 2,
    exit_not_weil = 3,
    exit_io = 4,
    exit_internal = 70,
};

/// Runs the tool with the given arguments, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppav
