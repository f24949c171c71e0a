#ifndef BIORDER_TOOLS_CLI_HPP
#define BIORDER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace biorder::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

// Runs one command. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biorder::cli

#endif  // BIORDER_TOOLS_CLI_HPP
