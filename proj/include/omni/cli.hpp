#pragma once

#include <iosfwd>

namespace omni::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kInvalidModel = 3,  // parse or validation failure
  kCapacity = 4,
  kCheckFailed = 5,  // verify mismatch or internal consistency failure
  kDomain = 6,       // argument outside its allowed range
};

// Entry point behind the `omni` executable. The model is read from the file
// named on the command line, or from `in` when none (or "-") is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace omni::cli
