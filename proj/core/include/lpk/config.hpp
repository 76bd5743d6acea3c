#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lpk {

inline constexpr const char* kConfigEnv = "LPK_CONFIG";

// key = value lines; '#' starts a comment; a [tolerances] section holds per-check tolerances.
struct RunConfig {
  int grid = 10;                        // 1D grid exponent
  int grid2 = 9;                        // per-axis exponent in 2D
  int scales = 0;                       // scale ceiling; 0 means grid - 3
  std::uint64_t seed = 1;
  std::size_t corpus = 20;              // 1D members per family
  std::size_t corpus2 = 4;              // 2D members per family
  std::size_t samples = 100000;         // Monte Carlo draws
  std::string out_dir = "lpk-out";
  std::map<std::string, double> tolerances;

  RunConfig();
  // Throws UsageError on out-of-range values.
  void validate() const;
  int scale_ceiling() const { return scales > 0 ? scales : grid - 3; }
  double tolerance(const std::string& key) const;

  std::string to_text() const;
  std::string hash() const;  // FNV-1a of to_text(), hex
  // Apply one key = value assignment.
  void set(const std::string& key, const std::string& value);
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
// The path named by LPK_CONFIG, or empty.
std::string default_config_path();
void save_config(const RunConfig& cfg, const std::string& path);

}  // namespace lpk
