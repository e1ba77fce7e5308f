#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qharm::cli {

/// Process exit codes: member/pass, non-member/fail, not certified, usage.
enum ExitCode : int { kPass = 0, kFail = 1, kUncertified = 2, kUsage = 64 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` (unless --output redirects them) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qharm::cli
