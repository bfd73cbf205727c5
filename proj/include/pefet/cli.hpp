#pragma once

#include <exception>
#include <string>
#include <vector>

namespace pefet {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitDisturb = 3,
    kExitRoundtrip = 4,
    kExitFit = 5,
};

/// Maps simulator exceptions onto the documented exit codes.
int exit_code_for(const std::exception& e);

/// Entry point of the `pefet` tool; returns the process exit code.
int run_cli(const std::vector<std::string>& args);

}  // namespace pefet
