#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qccs::cli {

enum ExitCode : int {
    kPass = 0,
    kPropertyFailure = 1,
    kUsage = 2,
    kSeedInvalid = 3,
    kIoError = 4,
};

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qccs::cli
