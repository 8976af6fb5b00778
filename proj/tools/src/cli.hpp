#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trilocal::cli {

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

/// Runs the tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trilocal::cli
