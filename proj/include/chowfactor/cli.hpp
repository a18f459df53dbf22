#pragma once

#include <string>
#include <vector>

namespace chowfactor {

/// Result of one CLI invocation: conventional streams plus the process
/// exit code. 0 = success, 1 = usage/domain/resource error, 2 = internal
/// consistency failure (independent derivations disagreed).
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Dispatches one command line (without the program name).
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace chowfactor
