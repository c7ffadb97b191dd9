#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfg::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kParseError = 2, kBudget = 3 };

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lfg::cli
