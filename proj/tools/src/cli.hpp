#ifndef SELFSIM_TOOLS_CLI_HPP_
#define SELFSIM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace selfsim::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitUnknown = 2,
  kExitInputError = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace selfsim::cli

#endif  // SELFSIM_TOOLS_CLI_HPP_
