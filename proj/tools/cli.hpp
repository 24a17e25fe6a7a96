// Command-line front end of the omega toolkit.

#ifndef OMEGA_TOOLS_CLI_HPP_
#define OMEGA_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace omega::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // failed claim, failed verification or aborted enumeration
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli

#endif  // OMEGA_TOOLS_CLI_HPP_
