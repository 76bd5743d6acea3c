#pragma once

#include <string>
#include <vector>

#include "lpk/config.hpp"

namespace lpk {

struct CheckResult {
  std::string id;
  std::string title;
  double value = 0.0;  // headline measurement
  double bound = 0.0;  // what it is compared against
  bool pass = false;
  double seconds = 0.0;
  std::string details;  // JSON object text
};

struct SuiteResult {
  std::string config_hash;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  // 0 when every check passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }
};

// Registered check ids, in run order.
const std::vector<std::string>& check_ids();
CheckResult run_check(const std::string& id, const RunConfig& cfg);
// Runs every check, or only the named one.
SuiteResult run_suite(const RunConfig& cfg, const std::string& only = "");
// summary.csv (check id, value, bound, pass), one <id>.json per check and run_config.toml.
void write_suite(const SuiteResult& r, const RunConfig& cfg, const std::string& dir);

}  // namespace lpk
