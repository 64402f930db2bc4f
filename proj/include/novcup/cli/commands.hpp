#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace novcup {

inline constexpr const char* kToolVersion = "0.1.0";

struct CommandOptions {
  std::string command;
  /// A path, "-" for stdin, or example:<name>. For `example`, the bare name.
  std::string input;
  std::optional<std::string> field;
  bool strict_dual = false;
  int max_page = 0;
  std::uint64_t seed = 1;
  bool timing = true;
};

/// Exit status: 0 success, 1 invalid input, 2 internal invariant violated.
int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace novcup
