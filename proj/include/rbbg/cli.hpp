#ifndef RBBG_CLI_HPP
#define RBBG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rbbg::cli {

/// Process exit codes. They never overlap.
enum ExitCode : int {
    kFeasible = 0,
    kInfeasible = 1,
    kInputError = 2,
    kIndeterminate = 3,
};

/// Runs one command line (args[0] is the program name). JSON goes to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbbg::cli

#endif  // RBBG_CLI_HPP
