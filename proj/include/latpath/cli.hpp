#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latpath::cli {

/// Exit codes of the `latpath` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (`args` excludes the program name). Results go to
/// `out`, diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpath::cli
