#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyntri {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitDegenerate = 3,
  kExitInternal = 4,
};

/// Entry point behind the `dyntri` executable. `args` excludes the program
/// name. Stream input is read from `in` when the path is `-` or omitted.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace dyntri
