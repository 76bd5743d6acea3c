#include "lpk/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lpk/errors.hpp"
#include "lpk/grid.hpp"

namespace lpk {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& v) {
  std::istringstream in(v);
  T x{};
  in >> x;
  if (in.fail() || !in.eof()) throw UsageError("config key '" + key + "' expects a number, got '" + v + "'");
  return x;
}

}  // namespace

RunConfig::RunConfig() {
  tolerances = {
      {"pou.residual", 1e-10},       {"pou.double_residual", 1e-9},  {"maximal.oracle", 2.0},
      {"cz.mean", 1e-12},            {"weak11.ceiling", 12.0},       {"rearrange.norm", 1e-12},
      {"rearrange.zygmund", 1e-6},   {"rearrange.llogl", 1e-10},     {"rearrange.split", 1e-12},
      {"llogl.upper", 16.0},         {"llogl.drift", 0.10},          {"khinchine.se", 3.0},
      {"khinchine.seed_spread", 0.02}, {"multiplier.identity", 1e-10}, {"multiplier.pairing", 1e-10},
      {"coefficients.spread", 2.0},  {"coefficients.reassembly", 1e-6}, {"stability.drift", 0.10},
      {"stability.eps_spread", 0.25}, {"tensor.factorization", 1e-9},
  };
}

void RunConfig::validate() const {
  if (grid < kMinLog || grid > kMaxLog) throw UsageError("grid exponent must lie in [4, 13], got " + std::to_string(grid));
  if (grid2 < kMinLog || grid2 > 10) throw UsageError("2D grid exponent must lie in [4, 10], got " + std::to_string(grid2));
  if (scales < 0 || scales > grid - 3) throw UsageError("scale ceiling must lie in [1, grid - 3]");
  if (corpus == 0 || corpus2 == 0) throw UsageError("corpus sizes must be positive");
  if (samples < 2) throw UsageError("sample count must be at least 2");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw UsageError("tolerance '" + k + "' must be positive");
}

double RunConfig::tolerance(const std::string& key) const {
  const auto it = tolerances.find(key);
  if (it == tolerances.end()) throw UsageError("no tolerance named '" + key + "'");
  return it->second;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "grid") grid = parse_number<int>(key, value);
  else if (key == "grid2") grid2 = parse_number<int>(key, value);
  else if (key == "scales") scales = parse_number<int>(key, value);
  else if (key == "seed") seed = parse_number<std::uint64_t>(key, value);
  else if (key == "corpus") corpus = parse_number<std::size_t>(key, value);
  else if (key == "corpus2") corpus2 = parse_number<std::size_t>(key, value);
  else if (key == "samples") samples = parse_number<std::size_t>(key, value);
  else if (key == "out") out_dir = value;
  else if (key.rfind("tolerances.", 0) == 0) tolerances[key.substr(11)] = parse_number<double>(key, value);
  else throw UsageError("unknown config key '" + key + "'");
}

std::string RunConfig::to_text() const {
  std::ostringstream o;
  o.precision(17);
  o << "grid = " << grid << "\ngrid2 = " << grid2 << "\nscales = " << scales << "\nseed = " << seed
    << "\ncorpus = " << corpus << "\ncorpus2 = " << corpus2 << "\nsamples = " << samples << "\nout = " << out_dir
    << "\n\n[tolerances]\n";
  for (const auto& [k, v] : tolerances) o << k << " = " << v << "\n";
  return o.str();
}

std::string RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_text()) h = (h ^ c) * 0x100000001b3ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw UsageError("config line " + std::to_string(lineno) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "tolerances") throw UsageError("unknown config section '" + section + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    cfg.set(section.empty() ? key : section + "." + key, value);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return parse_config(s.str());
}

std::string default_config_path() {
  const char* p = std::getenv(kConfigEnv);
  return p ? p : "";
}

void save_config(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write config file '" + path + "'");
  out << cfg.to_text();
}

}  // namespace lpk
