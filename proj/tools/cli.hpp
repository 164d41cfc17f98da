#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slitpath::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs the slitpath command line with args (program name excluded).
///
/// Subcommands: gf, verify, conjecture, roots. See `slitpath --help`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slitpath::cli
