#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hilbcup/orders.hpp"

namespace hilbcup {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b" into a weight.
Weight2 parse_weight2(std::string_view text);

}  // namespace hilbcup
