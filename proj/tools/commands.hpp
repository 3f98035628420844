#pragma once

#include <ostream>

namespace fuzzy::cli {

enum ExitCode { kSuccess = 0, kCheckFailure = 1, kInputError = 2 };

/// Parses the command line, runs one subcommand and returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fuzzy::cli
