#include <cstdio>
#include <map>
#include <string>

#include "lpk/config.hpp"
#include "lpk/suite.hpp"

namespace {

lpk::RunConfig pinned() {
  lpk::RunConfig cfg;
  cfg.grid = 10;
  cfg.grid2 = 9;
  cfg.scales = 0;
  cfg.seed = 1;
  cfg.corpus = 20;
  cfg.corpus2 = 4;
  cfg.samples = 100000;
  cfg.tolerances = {
      {"pou.residual", 1e-10},
      {"pou.double_residual", 1e-9},
      {"maximal.oracle", 2.0},
      {"cz.mean", 1e-12},
      {"weak11.ceiling", 12.0},
      {"rearrange.norm", 1e-12},
      {"rearrange.zygmund", 1e-6},
      {"rearrange.llogl", 1e-10},
      {"rearrange.split", 1e-12},
      {"llogl.upper", 16.0},
      {"llogl.drift", 0.10},
      {"khinchine.se", 3.0},
      {"khinchine.seed_spread", 0.02},
      {"multiplier.identity", 1e-10},
      {"multiplier.pairing", 1e-10},
      {"coefficients.spread", 2.0},
      {"coefficients.reassembly", 1e-6},
      {"stability.drift", 0.10},
      {"stability.eps_spread", 0.25},
      {"tensor.factorization", 1e-9},
  };
  cfg.validate();
  return cfg;
}

}  // namespace

int main() {
  const lpk::RunConfig cfg = pinned();
  int failed = 0;
  for (const auto& id : lpk::check_ids()) {
    const lpk::CheckResult r = lpk::run_check(id, cfg);
    std::printf("[%s] %-15s value=%-14.6g bound=%-14.6g (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.value,
                r.bound, r.seconds);
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria failed (config %s)\n", failed, lpk::check_ids().size(), cfg.hash().c_str());
  return failed ? 1 : 0;
}
