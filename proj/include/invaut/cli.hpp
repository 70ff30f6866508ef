#pragma once

#include <iosfwd>

namespace invaut {

// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kExitClean = 0,
    kExitCounterexample = 1,
    kExitUsage = 2,
    kExitTooLarge = 3,
    kExitHypothesis = 4,
};

/// Entry point of the `invaut` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invaut
