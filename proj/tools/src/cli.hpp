#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tightturan::cli {

/// Exit codes: 0 success or pass, 1 verified failure, 2 usage or precondition error.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tightturan::cli
