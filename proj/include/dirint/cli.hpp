#ifndef DIRINT_CLI_HPP
#define DIRINT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dirint::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDivergent = 2,
  kVerifyFailed = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirint::cli

#endif  // DIRINT_CLI_HPP
