#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpk/config.hpp"

namespace lpk::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Invocation {
  std::string command;     // bumps, maximal, ..., verify
  std::string subcommand;  // multiplier: apply | validate | coeffs; bumps: check
  RunConfig cfg;
  std::vector<std::string> flags;  // long names given on the command line
};

// Config file first (--config, else $LPK_CONFIG), then flags on top. Throws UsageError.
Invocation parse_args(const std::vector<std::string>& args);

// Parses and runs; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpk::cli
