#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace calegari::cli {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_usage        = 1,
    exit_malformed    = 2,
    exit_inconclusive = 3,
    exit_nontrivial   = 4,
  };

  // `args` excludes the program name. `in` backs `-` file arguments.
  int run(std::vector<std::string> const& args,
          std::istream& in,
          std::ostream& out,
          std::ostream& err);

}  // namespace calegari::cli
