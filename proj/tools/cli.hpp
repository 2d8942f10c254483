#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

/// Exit codes of the command-line front end.
enum Exit : int { kOk = 0, kUsage = 1, kBudget = 2, kVerifyFailed = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
