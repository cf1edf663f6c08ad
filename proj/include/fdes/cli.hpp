#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdes {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitError = 3 };

/// Runs one `fdes` invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fdes
