#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilclean {

// Exit codes shared by every subcommand:
//   0  success / no violation found
//   1  mathematical violation found (a finding, not a usage problem)
//   2  usage or input error
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (args excludes the program name) against the given
// streams. Never throws; never returns anything but 0, 1 or 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilclean
