#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frobstrat::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobstrat::cli
