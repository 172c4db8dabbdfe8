#pragma once
// Command-line front end. `run_cli` holds all behaviour so tests can drive it
// without spawning processes.

#include <ostream>
#include <string>
#include <vector>

namespace suboplex {

/// Environment variable naming the default coefficient field.
inline constexpr const char* kFieldEnvVar = "SUBOPLEX_FIELD";

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitCap = 2;

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suboplex
