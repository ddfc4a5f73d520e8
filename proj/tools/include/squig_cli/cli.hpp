#ifndef SQUIG_CLI_CLI_HPP
#define SQUIG_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace squig::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kNumeric = 4,
};

/// Runs the command line `args` (without the program name). The payload goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace squig::cli

#endif  // SQUIG_CLI_CLI_HPP
