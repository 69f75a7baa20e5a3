#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscob::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kDomainError = 2,
  kResourceError = 3,
  kUsage = 64,
  kDataError = 65,
};

/// Full command-line entry point. `args` excludes the program name. `in` is
/// read by `verify -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lenscob::cli
