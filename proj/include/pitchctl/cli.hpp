#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pitchctl::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pitchctl::cli
