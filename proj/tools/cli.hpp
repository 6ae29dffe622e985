#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <chowcount/verify.hpp>

namespace chowcount::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Every computation routes through `paths`, so a test can
/// substitute a broken path and observe the failure exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const PathSet &paths = PathSet::reference());

} // namespace chowcount::cli
