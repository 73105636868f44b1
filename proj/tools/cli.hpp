#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbd::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCounterexample = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (args[0] is the program name). Output goes
/// to `out`, diagnostics to `err`; standard input is read for "-" files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbd::cli
