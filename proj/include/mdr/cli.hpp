#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdr {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // a theorem-backed check failed
inline constexpr int kExitUsage = 2;        // bad arguments, parse or domain errors
inline constexpr int kExitIo = 3;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdr
