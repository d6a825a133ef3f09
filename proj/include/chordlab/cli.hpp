#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordlab {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kCapacityError = 3 };

/// Runs the command line `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordlab
