#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcgeo::cli {

enum ExitCode : int { kComputed = 0, kFailed = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcgeo::cli
