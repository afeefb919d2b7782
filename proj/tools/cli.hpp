#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace mindist::cli {

/// Process exit statuses; every failure mode has its own code.
enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kUsage = 2,
  kParseError = 3,
  kInvalidDimensions = 4,
  kRankDeficient = 5,
  kBudgetExceeded = 6,
  kUpperBoundOnly = 7,
  kInterrupted = 8,
  kTooLarge = 9,
  kNotADivisor = 10,
  kNotAUnit = 11,
  kLengthMismatch = 12,
  kInvalidArgument = 13,
  kOverflow = 14,
  kIoError = 15,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. `stop` is polled by long computations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* stop = nullptr);

}  // namespace mindist::cli
