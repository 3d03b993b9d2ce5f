#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapspec::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. Graph input named
/// "-" is read from `in`; results go to `out` unless -o is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lapspec::cli
