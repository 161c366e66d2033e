#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sortcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns 0 when every verdict holds, 1 when
/// one fails, 2 on bad input or usage.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sortcut::cli
