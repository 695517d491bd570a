#ifndef TAUTHEIGHT_TOOLS_COMMANDS_HPP
#define TAUTHEIGHT_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tautheight::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kCapacityError = 3,
  kInternalError = 4,
};

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tautheight::cli

#endif  // TAUTHEIGHT_TOOLS_COMMANDS_HPP
