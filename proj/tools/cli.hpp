#pragma once

#include <string>
#include <vector>

namespace heckewalk::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

}  // namespace heckewalk::cli
