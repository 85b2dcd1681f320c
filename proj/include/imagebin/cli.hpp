#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imagebin {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,       // bad arguments or malformed file
    exit_validation = 2,  // structural invariant or precondition violated
    exit_semantic = 3,    // semantic property missing, or an internal check failed
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics and one-line error messages to `err`; with --json a single
/// JSON document {command, inputs, result, diagnostics} goes to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imagebin
