#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slet::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kComputation = 3 };

/// Runs the `slet` command line with `args` (program name excluded). Results go to
/// `out` (or the --out file), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slet::cli
