#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsp::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // bad flags or parameters
inline constexpr int kExitPrecondition = 2;  // a mathematical precondition failed

/// Runs one command line (without the program name). Relative output paths
/// are resolved against $GSP_OUTPUT_DIR when it is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp::cli
