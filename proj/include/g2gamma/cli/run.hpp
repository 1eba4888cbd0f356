#ifndef G2GAMMA_CLI_RUN_HPP
#define G2GAMMA_CLI_RUN_HPP

#include <ostream>

namespace g2gamma::cli {

enum ExitCode : int {
  ok = 0,
  schema_error = 1,  // malformed or incomplete input, bad flags
  unsupported = 2,
  check_failed = 3,  // two-path disagreement or an internal identity failing
};

// The whole command: parses flags and the optional input file, computes,
// renders to `out`, reports errors on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace g2gamma::cli

#endif  // G2GAMMA_CLI_RUN_HPP
