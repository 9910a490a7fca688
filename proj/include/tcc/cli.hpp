#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcc::cli {

enum ExitCode : int { ok = 0, usage = 1, failure = 2, guard = 3 };

/// Runs `tcc` with args (excluding the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcc::cli
