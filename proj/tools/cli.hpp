#ifndef SLIDER_TOOLS_CLI_HPP
#define SLIDER_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace slider::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUnsolvableCheck = 1;
inline constexpr int kUnsolvableSolve = 2;
inline constexpr int kVerifyFailed = 3;
inline constexpr int kUsage = 64;

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slider::cli

#endif  // SLIDER_TOOLS_CLI_HPP
