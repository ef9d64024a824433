#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace afcore::cli {

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

// Runs one `afcore` command. args[0] is the program name. Exactly one JSON
// document goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace afcore::cli
