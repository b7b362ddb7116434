#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affcrystal {

/// Exit codes: 0 success or equality, 1 mathematical inequality, 2 bad input.
enum ExitCode : int { kExitOk = 0, kExitUnequal = 1, kExitInvalid = 2 };

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affcrystal
