#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ualg {

/// Exit statuses of the command-line front end.
enum ExitStatus : int { exit_ok = 0, exit_falsified = 1, exit_usage = 2 };

/// Runs one command line (without the program name). Writes a human-readable
/// report followed by a "--- machine ---" line and a JSON document to `out`;
/// usage errors and refusals go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ualg
