#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circle_sobolev::cli {

/// Exit statuses of `run`.
enum ExitCode : int {
  kSuccess = 0,
  kComputationFailed = 1,
  kConfigInvalid = 2,
};

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`
/// unless redirected with --out/--report; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Subcommand names in the order they are registered.
std::vector<std::string> subcommands();

}  // namespace circle_sobolev::cli
