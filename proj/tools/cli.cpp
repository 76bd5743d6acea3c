#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpk/adapted.hpp"
#include "lpk/bumps.hpp"
#include "lpk/cz.hpp"
#include "lpk/errors.hpp"
#include "lpk/hybrid.hpp"
#include "lpk/io.hpp"
#include "lpk/maximal.hpp"
#include "lpk/multiplier.hpp"
#include "lpk/norms.hpp"
#include "lpk/paraproduct.hpp"
#include "lpk/rearrange.hpp"
#include "lpk/square.hpp"
#include "lpk/suite.hpp"
#include "lpk/symbol.hpp"

namespace lpk::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  int grid = 0, grid2 = 0, scales = 0;
  std::uint64_t seed = 0;
  std::size_t corpus = 0, corpus2 = 0, samples = 0;
  std::string in, in2, out, emit;
  std::string kind = "hl";
  std::string mode = "plain";
  std::string family = "from_pou_1";
  std::string family_y;
  std::string hybrid_kind = "SS";
  std::string method = "both";
  std::string symbol;
  std::string block;
  std::string slots = "1";
  std::string eps = "seed:1";
  std::string only;
  double alpha = 0.0;
  int n = 1;
  long radius = 64;
  int scale = 1;
  int params = 1;
};

struct Cli {
  std::unique_ptr<CLI::App> app;
  Options opt;
};

void add_config_flags(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "config file (default: $" + std::string(kConfigEnv) + ")");
  sub->add_option("--grid", o.grid, "1D grid exponent L, N = 2^L");
  sub->add_option("--grid2", o.grid2, "per-axis 2D grid exponent");
  sub->add_option("--scales", o.scales, "scale ceiling K (0: grid - 3)");
  sub->add_option("--seed", o.seed, "corpus and sign seed");
  sub->add_option("--corpus", o.corpus, "1D corpus members per family");
  sub->add_option("--corpus2", o.corpus2, "2D corpus members per family");
  sub->add_option("--samples", o.samples, "Monte Carlo draws");
}

void add_io(CLI::App* sub, Options& o, bool second = false) {
  sub->add_option("--in", o.in, "input grid function (.json or binary)")->required();
  if (second) sub->add_option("--in2", o.in2, "second input grid function");
  sub->add_option("--out", o.out, "output file (default: stdout as JSON)");
}

std::unique_ptr<Cli> make_cli() {
  auto c = std::make_unique<Cli>();
  Options& o = c->opt;
  c->app = std::make_unique<CLI::App>("Harmonic-analysis operators on the discretized torus", "lpk");
  CLI::App& app = *c->app;
  app.require_subcommand(1);

  auto* bumps = app.add_subcommand("bumps", "bump partitions of unity");
  auto* bcheck = bumps->add_subcommand("check", "partition residuals, support leakage and C_m table");
  bumps->require_subcommand(1);
  add_config_flags(bcheck, o);
  bcheck->add_option("--out", o.out, "report file (default: stdout)");

  auto* maximal = app.add_subcommand("maximal", "maximal functions");
  add_config_flags(maximal, o);
  add_io(maximal, o);
  maximal->add_option("--kind", o.kind, "hl | dyadic | strong | shifted:n | sup:n | dir:j");

  auto* cz = app.add_subcommand("cz", "Calderon-Zygmund decomposition with invariant checks");
  add_config_flags(cz, o);
  cz->add_option("--in", o.in, "input grid function")->required();
  cz->add_option("--alpha", o.alpha, "threshold, above the L1 norm")->required();
  cz->add_option("--out", o.out, "report file (default: stdout)");

  auto* square = app.add_subcommand("square", "Littlewood-Paley square function");
  add_config_flags(square, o);
  add_io(square, o);
  square->add_option("--mode", o.mode, "plain | shifted:n | sup:n");
  square->add_option("--family", o.family, "from_pou_1 | from_pou_2 | low_pass | lower_bounded");

  auto* hybrid = app.add_subcommand("hybrid", "bi-parameter square/maximal hybrids on 2D input");
  add_config_flags(hybrid, o);
  add_io(hybrid, o);
  hybrid->add_option("--kind", o.hybrid_kind, "SS | SM | MS | MM");
  hybrid->add_option("--family", o.family, "family on the first axis");
  hybrid->add_option("--family-y", o.family_y, "family on the second axis (default: same)");

  auto* rearrange = app.add_subcommand("rearrange", "decreasing rearrangement as a step profile");
  add_config_flags(rearrange, o);
  rearrange->add_option("--in", o.in, "input grid function")->required();
  rearrange->add_option("--emit", o.emit, "profile CSV (breakpoint,value); default stdout");

  auto* zygmund = app.add_subcommand("zygmund", "L(log L)^n norm");
  add_config_flags(zygmund, o);
  zygmund->add_option("--in", o.in, "input grid function")->required();
  zygmund->add_option("--n", o.n, "logarithm power n >= 0");
  zygmund->add_option("--method", o.method, "iterated | closed_form | both");
  zygmund->add_option("--out", o.out, "report file (default: stdout)");

  auto* mult = app.add_subcommand("multiplier", "Fourier multipliers");
  mult->require_subcommand(1);
  auto* apply = mult->add_subcommand("apply", "apply a linear, bilinear or bi-parameter multiplier");
  add_config_flags(apply, o);
  add_io(apply, o, true);
  apply->add_option("--symbol", o.symbol, "symbol name")->required();
  auto* validate = mult->add_subcommand("validate", "probe the symbol estimates");
  add_config_flags(validate, o);
  validate->add_option("--symbol", o.symbol, "symbol name")->required();
  validate->add_option("--radius", o.radius, "probe radius R >= 16");
  validate->add_option("--out", o.out, "report file (default: stdout)");
  auto* coeffs = mult->add_subcommand("coeffs", "localized symbol coefficients");
  add_config_flags(coeffs, o);
  coeffs->add_option("--symbol", o.symbol, "symbol name")->required();
  coeffs->add_option("--scale", o.scale, "scale k");
  coeffs->add_option("--block", o.block, "cutoff block: 1..3 for bilinear, a,b for bi-parameter");
  coeffs->add_option("--emit", o.emit, "CSV file (default: stdout)");

  auto* para = app.add_subcommand("paraproduct", "one- and two-parameter paraproducts");
  add_config_flags(para, o);
  add_io(para, o, true);
  para->add_option("--params", o.params, "1 | 2");
  para->add_option("--slots", o.slots, "non-cancellative slot a, or a,b for two parameters");
  para->add_option("--eps", o.eps, "seed:S | file:path (JSON rows per scale; {x, y} rows for two parameters)");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  add_config_flags(verify, o);
  verify->add_option("--only", o.only, "run a single check id");
  verify->add_option("--out", o.out, "artifact directory (default: config out)");
  return c;
}

const CLI::App* chosen(const CLI::App& app) {
  const CLI::App* cur = &app;
  while (true) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) return cur;
    cur = subs.front();
  }
}

Invocation build(const Cli& c) {
  Invocation inv;
  const CLI::App& app = *c.app;
  const auto top = app.get_subcommands();
  inv.command = top.front()->get_name();
  const CLI::App* leaf = chosen(app);
  if (leaf != top.front()) inv.subcommand = leaf->get_name();
  for (const CLI::Option* opt : leaf->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty()) inv.flags.push_back(opt->get_lnames().front());
  auto given = [&](const std::string& name) { return std::find(inv.flags.begin(), inv.flags.end(), name) != inv.flags.end(); };

  const Options& o = c.opt;
  const std::string path = given("config") ? o.config : default_config_path();
  inv.cfg = path.empty() ? RunConfig() : load_config(path);
  RunConfig& cfg = inv.cfg;
  if (given("grid")) cfg.grid = o.grid;
  if (given("grid2")) cfg.grid2 = o.grid2;
  if (given("scales")) cfg.scales = o.scales;
  if (given("seed")) cfg.seed = o.seed;
  if (given("corpus")) cfg.corpus = o.corpus;
  if (given("corpus2")) cfg.corpus2 = o.corpus2;
  if (given("samples")) cfg.samples = o.samples;
  if (inv.command == "verify" && given("out")) cfg.out_dir = o.out;
  cfg.validate();
  return inv;
}

void parse_into(Cli& c, const std::vector<std::string>& args) {
  std::vector<std::string> rev(args.rbegin(), args.rend());
  c.app->parse(rev);
}

// ---- helpers

void write_run_config(const RunConfig& cfg, const std::string& output) {
  save_config(cfg, output + ".run_config.toml");
}

void emit_json(const json& j, const std::string& path, const RunConfig& cfg, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
  write_run_config(cfg, path);
}

void emit_text(const std::string& text, const std::string& path, const RunConfig& cfg, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  write_run_config(cfg, path);
}

void emit_function(const GridFunction& g, const std::string& path, const RunConfig& cfg, std::ostream& out) {
  if (path.empty()) {
    out << to_json_text(g) << "\n";
    return;
  }
  write_grid_function(g, path);
  write_run_config(cfg, path);
}

json stamp(json j, const RunConfig& cfg) {
  j["seed"] = cfg.seed;
  j["config_hash"] = cfg.hash();
  return j;
}

int scales_for(const RunConfig& cfg, int L) {
  const int top = std::max(1, L - 3);
  return cfg.scales > 0 ? std::min(cfg.scales, top) : top;
}

AdaptedFamily family(const std::string& name, const RunConfig& cfg, int L) {
  return make_adapted_family(parse_family(name), scales_for(cfg, L), L);
}

GridFunction need_1d(GridFunction f, const char* what) {
  if (f.dims() != 1) throw DimensionError(std::string(what) + " takes a 1D grid function");
  return f;
}

std::vector<int> parse_slots(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad slot list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty slot list");
  return out;
}

std::vector<cvec> eps_rows(const json& rows) {
  std::vector<cvec> out;
  for (const auto& row : rows) {
    cvec r;
    for (const auto& v : row) {
      if (v.is_number()) r.emplace_back(v.get<double>(), 0.0);
      else if (v.is_array() && v.size() == 2) r.emplace_back(v[0].get<double>(), v[1].get<double>());
      else throw ParseError("ε entries are numbers or [re, im] pairs");
    }
    out.push_back(std::move(r));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not JSON: " + e.what());
  }
}

std::uint64_t eps_seed(const std::string& spec) {
  try {
    return std::stoull(spec.substr(5));
  } catch (const std::exception&) {
    throw UsageError("bad ε seed in '" + spec + "'");
  }
}

// ---- commands

int cmd_bumps(const Invocation& inv, const Options& o, std::ostream& out) {
  const RunConfig& cfg = inv.cfg;
  const int L = cfg.grid, K = cfg.scale_ceiling();
  const PouCheck a = check_pou(build_pou(K, L));
  const DoubleCheck b = check_double_pou(build_double_pou(K, L));
  json constants = json::object();
  for (auto kind : {FamilyKind::from_pou_1, FamilyKind::from_pou_2, FamilyKind::low_pass}) {
    const auto r = verify_adapted(make_adapted_family(kind, K, L), 3);
    constants[family_name(kind)] = {{"C", r.C}, {"C_prime", r.C_prime}, {"finite", r.finite}};
  }
  const bool pass = std::max(a.residual, a.origin) <= cfg.tolerance("pou.residual") &&
                    std::max(b.residual, b.origin) <= cfg.tolerance("pou.double_residual");
  json j{{"grid", L},
         {"scales", K},
         {"partition", {{"band", a.band}, {"residual", a.residual}, {"origin", a.origin}, {"leakage", a.leakage},
                        {"second_mean", a.second_mean}}},
         {"double", {{"band", b.band}, {"residual", b.residual}, {"origin", b.origin}, {"leakage", b.leakage},
                     {"absorption", b.absorption}}},
         {"constants", constants},
         {"pass", pass}};
  emit_json(stamp(j, cfg), o.out, cfg, out);
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_maximal(const Invocation& inv, const Options& o, std::ostream& out) {
  const GridFunction f = read_grid_function(o.in);
  emit_function(maximal(f, MaximalKind::parse(o.kind)), o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_cz(const Invocation& inv, const Options& o, std::ostream& out) {
  const GridFunction f = need_1d(read_grid_function(o.in), "cz");
  const CZDecomposition d = cz_decompose(f, o.alpha);
  const CZCheck k = check_cz(f, d);
  json ivs = json::array();
  for (std::size_t i = 0; i < d.intervals.size(); ++i)
    ivs.push_back({{"interval", d.intervals[i].text()}, {"average", d.averages[i]}});
  json j{{"alpha", d.alpha},
         {"intervals", ivs},
         {"checks",
          {{"disjoint", k.disjoint},
           {"reconstruction", k.reconstruction},
           {"supported", k.supported},
           {"max_bad_mean", k.max_bad_mean},
           {"measure", k.measure},
           {"measure_bound", k.measure_bound},
           {"averages_in_range", k.averages_in_range},
           {"good_l2sq", k.good_l2sq},
           {"good_bound", k.good_bound},
           {"worst_bad_ratio", k.worst_bad_ratio}}},
         {"pass", k.ok()}};
  emit_json(stamp(j, inv.cfg), o.out, inv.cfg, out);
  return k.ok() ? kExitPass : kExitCheckFailed;
}

int cmd_square(const Invocation& inv, const Options& o, std::ostream& out) {
  const GridFunction f = need_1d(read_grid_function(o.in), "square");
  const int L = f.log_sizes()[0];
  emit_function(square_function(f, family(o.family, inv.cfg, L), SquareMode::parse(o.mode)), o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_hybrid(const Invocation& inv, const Options& o, std::ostream& out) {
  const GridFunction f = read_grid_function(o.in);
  if (f.dims() != 2) throw DimensionError("hybrid takes a 2D grid function");
  const FamilyPair P{family(o.family, inv.cfg, f.log_sizes()[0]),
                     family(o.family_y.empty() ? o.family : o.family_y, inv.cfg, f.log_sizes()[1])};
  emit_function(hybrid(f, P, parse_hybrid(o.hybrid_kind)), o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_rearrange(const Invocation& inv, const Options& o, std::ostream& out) {
  const StepProfile p = rearrangement(read_grid_function(o.in));
  std::ostringstream s;
  s << std::setprecision(17) << "breakpoint,value\n";
  for (std::size_t i = 0; i < p.steps(); ++i) s << p.breakpoints()[i] << "," << p.values()[i] << "\n";
  s << p.support() << "," << 0.0 << "\n";
  emit_text(s.str(), o.emit, inv.cfg, out);
  return kExitPass;
}

int cmd_zygmund(const Invocation& inv, const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n must be non-negative");
  if (o.method != "iterated" && o.method != "closed_form" && o.method != "both")
    throw UsageError("--method must be iterated, closed_form or both");
  const StepProfile p = rearrangement(read_grid_function(o.in));
  json j{{"n", o.n}};
  double a = 0.0, b = 0.0;
  if (o.method != "closed_form") j["iterated"] = a = zygmund_norm(p, o.n, ZygmundMethod::iterated);
  if (o.method != "iterated") j["closed_form"] = b = zygmund_norm(p, o.n, ZygmundMethod::closed_form);
  if (o.method == "both") j["relative_gap"] = std::abs(a - b) / std::max(std::abs(b), 1e-300);
  emit_json(stamp(j, inv.cfg), o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_multiplier_apply(const Invocation& inv, const Options& o, std::ostream& out) {
  const MultiplierSymbol m = make_symbol(o.symbol);
  const GridFunction f = read_grid_function(o.in);
  if (m.arity() == 1) {
    emit_function(apply_1d(m, need_1d(f, "a linear multiplier")), o.out, inv.cfg, out);
    return kExitPass;
  }
  if (o.in2.empty()) throw UsageError("symbol '" + o.symbol + "' is bilinear and needs --in2");
  const GridFunction g = read_grid_function(o.in2);
  const GridFunction r = m.parameters() == 2 ? apply_biparameter(m, f, g) : apply_bilinear(m, f, g);
  emit_function(r, o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_multiplier_validate(const Invocation& inv, const Options& o, std::ostream& out) {
  const SymbolValidation v = validate_symbol(make_symbol(o.symbol), o.radius);
  json j{{"symbol", v.name},       {"class", symbol_class_name(v.cls)}, {"radius", v.radius},
         {"order", v.order},       {"constants", v.constants},          {"ceiling", v.ceiling},
         {"pass", v.pass}};
  emit_json(stamp(j, inv.cfg), o.out, inv.cfg, out);
  return v.pass ? kExitPass : kExitCheckFailed;
}

int cmd_multiplier_coeffs(const Invocation& inv, const Options& o, std::ostream& out) {
  const MultiplierSymbol m = make_symbol(o.symbol);
  const std::vector<int> block = o.block.empty() ? std::vector<int>{1, 1} : parse_slots(o.block);
  SymbolCoefficients c;
  if (m.arity() == 1) c = symbol_coefficients(m, o.scale);
  else if (m.parameters() == 1) c = symbol_coefficients(m, block[0], o.scale);
  else c = symbol_coefficients(m, block[0], block.size() > 1 ? block[1] : block[0], o.scale, o.scale);
  std::ostringstream s;
  s << std::setprecision(17);
  for (int a = 0; a < c.dims; ++a) s << "n" << a + 1 << ",";
  s << "abs,weighted\n";
  std::vector<long> n(static_cast<std::size_t>(c.dims));
  for (std::size_t idx = 0; idx < c.c.size(); ++idx) {
    std::size_t rest = idx;
    double weight = std::abs(c.c[idx]);
    for (int a = c.dims - 1; a >= 0; --a) {
      const std::size_t Q = c.points[static_cast<std::size_t>(a)];
      const std::size_t i = rest % Q;
      rest /= Q;
      n[static_cast<std::size_t>(a)] = i < Q / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(Q);
      weight *= std::pow(std::abs(static_cast<double>(n[static_cast<std::size_t>(a)])) + 1.0, c.decay_exponent);
    }
    for (long v : n) s << v << ",";
    s << std::abs(c.c[idx]) << "," << weight << "\n";
  }
  emit_text(s.str(), o.emit, inv.cfg, out);
  return kExitPass;
}

int cmd_paraproduct(const Invocation& inv, const Options& o, std::ostream& out) {
  if (o.params != 1 && o.params != 2) throw UsageError("--params must be 1 or 2");
  if (o.in2.empty()) throw UsageError("paraproducts need --in2");
  const GridFunction f = read_grid_function(o.in), g = read_grid_function(o.in2);
  if (f.dims() != o.params) throw DimensionError("--params " + std::to_string(o.params) + " needs " +
                                                 std::to_string(o.params) + "D inputs");
  const auto slots = parse_slots(o.slots);
  if (static_cast<int>(slots.size()) != o.params) throw UsageError("--slots needs one label per parameter");
  auto axis = [&](int slot, int L) {
    std::vector<AdaptedFamily> fams;
    for (int i = 1; i <= 3; ++i) {
      const char* name = i == slot ? "low_pass" : (i == 3 || (slot == 3 && i == 2) ? "from_pou_2" : "from_pou_1");
      fams.push_back(family(name, inv.cfg, L));
    }
    return fams;
  };
  ParaproductSpec spec;
  spec.params = o.params;
  spec.slot_a = slots[0];
  spec.slot_b = slots.back();
  spec.x = axis(slots[0], f.log_sizes()[0]);
  if (o.params == 2) spec.y = axis(slots[1], f.log_sizes()[1]);
  const int Kx = scales_for(inv.cfg, f.log_sizes()[0]);
  const int Ky = o.params == 2 ? scales_for(inv.cfg, f.log_sizes()[1]) : 0;
  if (o.eps.rfind("seed:", 0) == 0) {
    const std::uint64_t s = eps_seed(o.eps);
    if (o.params == 1) spec.eps = EpsilonSequence::rademacher(Kx, s);
    else spec.rect_eps = RectEpsilon::rademacher(Kx, Ky, s);
  } else if (o.eps.rfind("file:", 0) == 0) {
    const json j = read_json_file(o.eps.substr(5));
    if (o.params == 1) {
      if (!j.contains("eps")) throw ParseError("ε file needs an 'eps' field");
      spec.eps = EpsilonSequence::from_values(eps_rows(j["eps"]));
    } else {
      if (!j.contains("x") || !j.contains("y")) throw ParseError("two-parameter ε file needs 'x' and 'y' fields");
      spec.rect_eps = RectEpsilon::separable(EpsilonSequence::from_values(eps_rows(j["x"])),
                                             EpsilonSequence::from_values(eps_rows(j["y"])));
    }
  } else {
    throw UsageError("--eps must be seed:S or file:path");
  }
  emit_function(paraproduct(spec, f, g), o.out, inv.cfg, out);
  return kExitPass;
}

int cmd_verify(const Invocation& inv, const Options& o, std::ostream& out) {
  const RunConfig& cfg = inv.cfg;
  const SuiteResult r = run_suite(cfg, o.only);
  write_suite(r, cfg, cfg.out_dir);
  for (const auto& c : r.checks)
    out << std::left << std::setw(16) << c.id << (c.pass ? "PASS" : "FAIL") << "  value=" << std::setprecision(6)
        << c.value << "  bound=" << c.bound << "  " << std::fixed << std::setprecision(1) << c.seconds << "s"
        << std::defaultfloat << "\n";
  if (!r.all_pass()) {
    out << "failing:";
    for (const auto& c : r.checks)
      if (!c.pass) out << " " << c.id;
    out << "\n";
  }
  out << "artifacts: " << cfg.out_dir << "\n";
  return r.exit_code();
}

}  // namespace

Invocation parse_args(const std::vector<std::string>& args) {
  auto c = make_cli();
  try {
    parse_into(*c, args);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return build(*c);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto c = make_cli();
  try {
    parse_into(*c, args);
  } catch (const CLI::CallForHelp& e) {
    out << c->app->help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    const CLI::App* leaf = chosen(*c->app);
    err << "error: " << e.what() << "\n\n" << leaf->help();
    return kExitUsage;
  }
  try {
    const Invocation inv = build(*c);
    const Options& o = c->opt;
    if (inv.command == "bumps") return cmd_bumps(inv, o, out);
    if (inv.command == "maximal") return cmd_maximal(inv, o, out);
    if (inv.command == "cz") return cmd_cz(inv, o, out);
    if (inv.command == "square") return cmd_square(inv, o, out);
    if (inv.command == "hybrid") return cmd_hybrid(inv, o, out);
    if (inv.command == "rearrange") return cmd_rearrange(inv, o, out);
    if (inv.command == "zygmund") return cmd_zygmund(inv, o, out);
    if (inv.command == "multiplier") {
      if (inv.subcommand == "apply") return cmd_multiplier_apply(inv, o, out);
      if (inv.subcommand == "validate") return cmd_multiplier_validate(inv, o, out);
      return cmd_multiplier_coeffs(inv, o, out);
    }
    if (inv.command == "paraproduct") return cmd_paraproduct(inv, o, out);
    return cmd_verify(inv, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lpk::cli
