#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evpsim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSideCondition = 3;
inline constexpr int kExitIo = 4;

/// Entry point of the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evpsim
