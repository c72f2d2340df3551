// Command-line front end. Exit codes: 0 success, 1 I/O or internal
// failure, 2 usage or parse error, 3 exact-solver guard refusal.

#ifndef MKGA_CLI_HPP
#define MKGA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mkga {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitGuard = 3,
};

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mkga

#endif  // MKGA_CLI_HPP
