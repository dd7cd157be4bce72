#ifndef SUPPBOUND_CLI_HPP
#define SUPPBOUND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace suppbound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line (args excludes the program name). Reports go to out
/// or to the --out file; diagnostics go to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suppbound

#endif  // SUPPBOUND_CLI_HPP
