#ifndef RSUM_CLI_CLI_HPP
#define RSUM_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rsum::cli {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_input = 2, exit_resource = 3 };

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsum::cli

#endif
