#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbiont::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Reads SYMBIONT_MAX_AGENTS for the enumeration cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symbiont::cli
