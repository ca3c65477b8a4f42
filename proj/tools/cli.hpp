#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilbfam::cli {

// Exit codes: 0 success/PASS, 1 FAIL or negative result, 2 usage or
// validation error, 3 enumeration cap exceeded, 4 internal error.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kResource = 3, kInternal = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbfam::cli
