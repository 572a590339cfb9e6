#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burau_forge {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitPrecision = 3 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, a human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burau_forge
