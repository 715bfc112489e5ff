#ifndef MSTD_TOOLS_CLI_HPP
#define MSTD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mstd::cli {

inline constexpr int exit_mstd = 0;
inline constexpr int exit_ok = 0;
inline constexpr int exit_not_mstd = 1;
inline constexpr int exit_error = 2;

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err. Returns the process exit status.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace mstd::cli

#endif
