#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lq::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lq::cli
