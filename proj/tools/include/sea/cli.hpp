#pragma once

#include <string>
#include <vector>

namespace sea::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kUsage = 2,
    kInternal = 3,
};

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;  // JSON on exit codes 0 and 1
    std::string err;
};

/// Runs one command. args excludes the program name.
CommandResult execute(const std::vector<std::string>& args);

}  // namespace sea::cli
