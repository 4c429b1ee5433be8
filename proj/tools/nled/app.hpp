#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nled::app {

/// Process environment consulted by the CLI.
struct Environment {
  std::optional<std::string> constants_preset;  ///< NLED_CONSTANTS_PRESET
};

Environment environment_from_process();

/// Runs one `nled` invocation. `args` excludes the program name.
/// Returns 0 on success, 2 for configuration errors, 3 for numerical failures; errors are
/// written to `err` as {"error": {"kind", "message", "diagnostics"}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = environment_from_process());

}  // namespace nled::app
