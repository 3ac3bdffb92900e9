#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ccs::cli {

enum ExitCode : int { kPass = 0, kFailure = 1, kInconclusive = 2, kUsage = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs::cli
