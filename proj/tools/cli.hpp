#pragma once

#include <iosfwd>

namespace onlinecolor::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kViolation = 3 };

/// Parses argv and runs one subcommand. Machine output goes to `out` (or a
/// file named by --out), human summaries to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace onlinecolor::cli
