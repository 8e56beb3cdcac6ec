#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairseq::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kMismatch = 1,      ///< verify found a mismatch; oeis-check disagrees
  kUsage = 2,         ///< bad flags or flag combinations
  kTermFailure = 3,   ///< a term could not be produced (source exhausted, budget)
  kNoData = 4,        ///< oeis-check ran out of reference terms
  kNetwork = 5,       ///< oeis-check could not reach the server
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairseq::cli
