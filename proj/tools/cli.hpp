#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzeta/sweep.hpp"

namespace wzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for --help; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "name:start:end:steps".
SweepAxis parse_sweep_axis(const std::string& spec);

/// Precedence, lowest first: built-in defaults, --preset, --config file, command-line flags.
/// args excludes the program name. Throws UsageError (or HelpRequested).
RunConfig parse_config(const std::vector<std::string>& args);

/// Full program: parse, sweep, write. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wzeta::cli
