#pragma once

#include <iosfwd>

namespace twobridge::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kImproper = 3,
  kLimit = 4,
  kIoError = 5,
};

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twobridge::cli
