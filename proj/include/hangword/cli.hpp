#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hangword {

  // Exit codes shared by every subcommand.
  inline constexpr int kExitOk          = 0;
  inline constexpr int kExitFailed      = 1;
  inline constexpr int kExitInputError  = 2;

  // Runs one command line (args[0] is the program name). Everything is
  // written to `out` and `err`; nothing touches the process streams.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace hangword
