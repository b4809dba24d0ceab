#ifndef PDCUT_CLI_HPP
#define PDCUT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdcut::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageOrInputError = 2,
  kRandomnessFailure = 3,
};

/// Runs one `pdcut` subcommand. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pdcut::cli

#endif  // PDCUT_CLI_HPP
