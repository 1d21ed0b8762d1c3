#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liouville {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitUndecidable = 2, kExitInternal = 3 };

/// Runs one command line (args excludes the program name). Results go to
/// `out` (or the --out file), error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liouville
