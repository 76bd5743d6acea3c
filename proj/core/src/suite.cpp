#include "lpk/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include <nlohmann/json.hpp>

#include "lpk/adapted.hpp"
#include "lpk/bumps.hpp"
#include "lpk/coefficients.hpp"
#include "lpk/corpus.hpp"
#include "lpk/cz.hpp"
#include "lpk/errors.hpp"
#include "lpk/experiments.hpp"
#include "lpk/hybrid.hpp"
#include "lpk/maximal.hpp"
#include "lpk/multiplier.hpp"
#include "lpk/norms.hpp"
#include "lpk/paraproduct.hpp"
#include "lpk/probes.hpp"
#include "lpk/rearrange.hpp"
#include "lpk/square.hpp"

namespace lpk {

namespace {

using nlohmann::json;

struct Outcome {
  double value = 0.0;
  double bound = 0.0;
  bool pass = false;
  json details = json::object();
};

Corpus corpus_1d(const RunConfig& cfg, int L) { return generate_corpus(cfg.seed, {L}, {cfg.corpus, true}); }
Corpus corpus_2d(const RunConfig& cfg, int L) { return generate_corpus(cfg.seed, {L, L}, {cfg.corpus2, true}); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Brute-force sweep over every grid arc containing sample i.
double brute_maximal_at(const std::vector<double>& v, std::size_t i) {
  const std::size_t N = v.size();
  double best = 0.0;
  for (std::size_t len = 1; len <= N; ++len)
    for (std::size_t back = 0; back < len; ++back) {
      double s = 0.0;
      for (std::size_t t = 0; t < len; ++t) s += v[(i + N - back + t) % N];
      best = std::max(best, s / static_cast<double>(len));
    }
  return best;
}

//--- 1
Outcome check_pou(const RunConfig& cfg) {
  const int L = cfg.grid, K = std::min(7, cfg.scale_ceiling());
  const double tol = cfg.tolerance("pou.residual"), tol2 = cfg.tolerance("pou.double_residual");
  const PouCheck a = lpk::check_pou(build_pou(K, L));
  const DoubleCheck b = check_double_pou(build_double_pou(K, L));
  const double r1 = std::max(a.residual, a.origin), r2 = std::max(b.residual, b.origin);
  Outcome o;
  o.value = std::max(r1 / tol, r2 / tol2);
  o.bound = 1.0;
  o.pass = r1 <= tol && r2 <= tol2;
  o.details = {{"L", L},          {"K", K},          {"band", a.band},         {"residual", a.residual},
               {"origin", a.origin}, {"leakage", a.leakage}, {"double_band", b.band}, {"double_residual", b.residual},
               {"double_origin", b.origin}, {"absorption", b.absorption}, {"tolerance", tol}, {"double_tolerance", tol2}};
  return o;
}

//--- 2
Outcome check_fs_sum(const RunConfig& cfg) {
  const int L = std::max(cfg.grid, 8);
  Outcome o;
  o.pass = true;
  o.value = std::numeric_limits<double>::infinity();
  o.bound = 0.0;
  json rows = json::array();
  for (long N : {16L, 64L, 256L}) {
    const auto r = fs_sum_counterexample(L, N);
    rows.push_back({{"N", N}, {"min_sum", r.value}, {"bound", r.bound}, {"pass", r.pass()}});
    o.pass = o.pass && r.pass();
    o.value = std::min(o.value, r.value - r.bound);
  }
  o.details = {{"L", L}, {"rows", rows}, {"headline", "min over N of (min_x sum - (log N - 1))"}};
  return o;
}

//--- 3
Outcome check_fs_growth(const RunConfig& cfg) {
  const int L = std::max(cfg.grid, 7), K = 6;
  Outcome o;
  o.pass = true;
  o.value = std::numeric_limits<double>::infinity();
  json rows = json::array();
  for (double r : {2.0, 4.0}) {
    const auto c = fs_growth_counterexample(L, K, r);
    rows.push_back({{"K", K}, {"r", r}, {"min_value", c.value}, {"bound", c.bound}, {"pass", c.pass()}});
    o.pass = o.pass && c.pass();
    o.value = std::min(o.value, c.value - c.bound);
  }
  o.details = {{"L", L}, {"rows", rows}, {"headline", "min over r of (value - K^{1/r}/2)"}};
  return o;
}

//--- 4
Outcome check_maximal_oracle(const RunConfig& cfg) {
  const int L = cfg.grid;
  const std::size_t N = std::size_t{1} << L;
  const GridFunction half = GridFunction::sample(L, [](double x) { return x < 0.5 ? 1.0 : 0.0; });
  const GridFunction M = maximal(half, MaximalKind::hl());
  const std::size_t at = 3 * N / 4;
  const double fast = M[at].real(), brute = brute_maximal_at(half.magnitudes(), at);
  const double slack = cfg.tolerance("maximal.oracle") / static_cast<double>(N);
  const Corpus c = corpus_1d(cfg, L);
  std::size_t checked = 0, violations = 0;
  for (std::size_t i = 0; i < c.size() && checked < 100; ++i, ++checked) {
    const GridFunction& f = c[i];
    const GridFunction md = maximal(f, MaximalKind::dyadic()), mh = maximal(f, MaximalKind::hl());
    for (std::size_t x = 0; x < f.count(); ++x) {
      const double s = 1e-12 * std::max(1.0, mh[x].real());
      if (std::abs(f[x]) > md[x].real() + s || md[x].real() > mh[x].real() + s) ++violations;
    }
  }
  Outcome o;
  o.value = std::abs(fast - 2.0 / 3.0);
  o.bound = slack;
  o.pass = o.value <= slack && std::abs(fast - brute) <= 1e-12 && violations == 0 && checked == 100;
  o.details = {{"L", L},          {"M_at_three_quarters", fast}, {"brute_force", brute}, {"target", 2.0 / 3.0},
               {"functions", checked}, {"chain_violations", violations}};
  return o;
}

//--- 5
Outcome check_cz(const RunConfig& cfg) {
  const Corpus c = corpus_1d(cfg, cfg.grid);
  const double mean_tol = cfg.tolerance("cz.mean");
  std::size_t pairs = 0, failures = 0;
  double worst_measure = 0.0, worst_good = 0.0, worst_bad = 0.0, worst_mean = 0.0, worst_rec = 0.0;
  bool disjoint = true, ranges = true, supported = true;
  for (double factor : {2.0, 8.0, 1.25})
    for (std::size_t i = 0; i < c.size() && pairs < 200; ++i) {
      const double l1 = norm(c[i], NormSpec::lp(1));
      if (!(l1 > 0.0)) continue;
      const double alpha = factor * l1;
      const auto d = cz_decompose(c[i], alpha);
      const auto k = lpk::check_cz(c[i], d);
      ++pairs;
      disjoint = disjoint && k.disjoint;
      ranges = ranges && k.averages_in_range;
      supported = supported && k.supported;
      worst_measure = std::max(worst_measure, k.measure / k.measure_bound);
      worst_good = std::max(worst_good, k.good_bound > 0 ? k.good_l2sq / k.good_bound : 0.0);
      worst_bad = std::max(worst_bad, k.worst_bad_ratio);
      worst_mean = std::max(worst_mean, k.max_bad_mean);
      worst_rec = std::max(worst_rec, k.reconstruction / k.reconstruction_tol);
      if (!k.ok() || k.max_bad_mean > mean_tol) ++failures;
    }
  Outcome o;
  o.value = std::max({worst_measure, worst_good, worst_bad, worst_mean / mean_tol, worst_rec});
  o.bound = 1.0;
  o.pass = failures == 0 && pairs == 200 && o.value <= 1.0;
  o.details = {{"pairs", pairs},
               {"failures", failures},
               {"disjoint", disjoint},
               {"averages_in_range", ranges},
               {"supported", supported},
               {"measure_over_bound", worst_measure},
               {"good_l2sq_over_5_alpha_l1", worst_good},
               {"bad_l1_over_4_alpha_len", worst_bad},
               {"max_bad_mean", worst_mean},
               {"reconstruction_over_tol", worst_rec}};
  return o;
}

//--- 6
Outcome check_weak11(const RunConfig& cfg) {
  const Corpus c = corpus_1d(cfg, cfg.grid);
  double worst = 0.0;
  std::string who;
  for (const auto& m : c.members) {
    const double l1 = norm(m.f, NormSpec::lp(1));
    if (!(l1 > 0.0)) continue;
    const double r = norm(maximal(m.f, MaximalKind::hl()), NormSpec::weak(1)) / l1;
    if (r > worst) {
      worst = r;
      who = m.label;
    }
  }
  Outcome o;
  o.value = worst;
  o.bound = cfg.tolerance("weak11.ceiling");
  o.pass = worst <= o.bound;
  o.details = {{"functions", c.size()}, {"worst", worst}, {"worst_member", who}};
  return o;
}

//--- 7
Outcome check_rearrange(const RunConfig& cfg) {
  const int L = cfg.grid;
  const Corpus c = corpus_1d(cfg, L);
  const double tn = cfg.tolerance("rearrange.norm"), tz = cfg.tolerance("rearrange.zygmund"),
               tl = cfg.tolerance("rearrange.llogl"), ts = cfg.tolerance("rearrange.split");
  bool equimeasurable = true;
  double norm_gap = 0.0;
  for (const auto& m : c.members) {
    const StepProfile p = rearrangement(m.f);
    const auto mags = m.f.magnitudes();
    for (double lambda : p.values()) {
      const double direct =
          static_cast<double>(std::count_if(mags.begin(), mags.end(), [&](double v) { return v > lambda; })) /
          static_cast<double>(mags.size());
      equimeasurable = equimeasurable && direct == p.distribution(lambda);
    }
    for (double q : {1.0, 2.0, 4.0}) {
      const double a = norm(m.f, NormSpec::lp(q)), b = p.lp_norm(q);
      norm_gap = std::max(norm_gap, std::abs(a - b) / std::max(1e-300, a));
    }
  }
  const GridFunction one = GridFunction::constant({L}, 1.0);
  double one_gap = 0.0;
  json ones = json::array();
  for (int n = 0; n <= 4; ++n) {
    const double a = zygmund_norm(one, n, ZygmundMethod::iterated), b = zygmund_norm(one, n, ZygmundMethod::closed_form);
    one_gap = std::max({one_gap, std::abs(a - 1.0), std::abs(b - 1.0)});
    ones.push_back({{"n", n}, {"iterated", a}, {"closed_form", b}});
  }
  double ind_gap = 0.0;
  for (double e : {0.25, 1.0 / 16}) {
    const GridFunction chi = GridFunction::sample(L, [&](double x) { return x < e ? 1.0 : 0.0; });
    ind_gap = std::max(ind_gap, std::abs(zygmund_norm(chi, 1) - e * (1.0 + std::log(1.0 / e))));
  }
  double split_gap = 0.0;
  std::size_t cases = 0;
  for (std::size_t i = 0; i < c.size() && cases < 50; ++i)
    for (double t : {1.0 / 8, 0.3}) {
      if (cases >= 50) break;
      const auto s = optimal_l1_linf_split(c[i], t);
      split_gap = std::max(split_gap, rel(s.value, t * rearrangement(c[i]).average(t)));
      ++cases;
    }
  Outcome o;
  o.value = std::max({norm_gap / tn, one_gap / tz, ind_gap / tl, split_gap / ts});
  o.bound = 1.0;
  o.pass = equimeasurable && o.value <= 1.0 && cases == 50;
  o.details = {{"equimeasurable", equimeasurable}, {"norm_gap", norm_gap}, {"unit_norms", ones},
               {"unit_gap", one_gap},              {"indicator_gap", ind_gap}, {"split_cases", cases},
               {"split_gap", split_gap}};
  return o;
}

//--- 8
Outcome check_llogl(const RunConfig& cfg) {
  const LloglReport lo = llogl_maximal_experiment(corpus_1d(cfg, cfg.grid - 1));
  const LloglReport hi = llogl_maximal_experiment(corpus_1d(cfg, cfg.grid));
  const double upper = cfg.tolerance("llogl.upper"), drift_tol = cfg.tolerance("llogl.drift");
  double drift = 0.0;
  std::string who;
  for (std::size_t i = 0; i < std::min(lo.rows.size(), hi.rows.size()); ++i) {
    const double d = std::abs(hi.rows[i].ratio - lo.rows[i].ratio) / lo.rows[i].ratio;
    if (d > drift) {
      drift = d;
      who = hi.rows[i].label;
    }
  }
  std::string low_member;
  double low = std::numeric_limits<double>::infinity();
  for (const auto* r : {&lo, &hi})
    for (const auto& row : r->rows)
      if (row.curve_min < low) {
        low = row.curve_min;
        low_member = row.label;
      }
  const double high = std::max(lo.curve_max, hi.curve_max);
  Outcome o;
  o.value = std::max({1.0 / low, high / upper, drift / drift_tol});
  o.bound = 1.0;
  o.pass = low >= 1.0 && high <= upper && drift <= drift_tol;
  o.details = {{"grids", {cfg.grid - 1, cfg.grid}},
               {"t_window", {lo.t_lo, lo.t_hi}},
               {"curve_min", low},
               {"curve_min_member", low_member},
               {"curve_max", high},
               {"upper", upper},
               {"ratio_drift", drift},
               {"drift_member", who}};
  return o;
}

//--- 9
Outcome check_khinchine(const RunConfig& cfg) {
  std::vector<double> a;
  for (int j = 1; j <= 32; ++j) a.push_back(1.0 / j);
  const std::vector<double> ps{1.0, 2.0, 4.0};
  const auto r1 = khinchine_experiment(a, ps, cfg.samples, cfg.seed);
  const auto r2 = khinchine_experiment(a, ps, cfg.samples, mix_seed(cfg.seed, 77));
  const double z = cfg.tolerance("khinchine.se"), spread_tol = cfg.tolerance("khinchine.seed_spread");
  const double moment_z = std::abs(r1.second_moment - r1.l2sq) / r1.second_moment_se;
  bool tails = true;
  json tail_rows = json::array();
  for (const auto& t : r1.tails) {
    tails = tails && t.frequency <= t.bound;
    tail_rows.push_back({{"t", t.t}, {"frequency", t.frequency}, {"wilson", {t.wilson.lo, t.wilson.hi}}, {"bound", t.bound}});
  }
  // Khinchine brackets with the optimal constants for p = 1 and p = 4.
  const double l1_lo = 1.0 / std::numbers::sqrt2, l4_hi = std::pow(3.0, 0.25);
  const bool bracket = r1.ratios[0] >= l1_lo && r1.ratios[0] <= 1.0 && r1.ratios[2] >= 1.0 && r1.ratios[2] <= l4_hi &&
                       r2.ratios[0] >= l1_lo && r2.ratios[0] <= 1.0 && r2.ratios[2] >= 1.0 && r2.ratios[2] <= l4_hi;
  const double spread = std::max(std::abs(r1.ratios[0] - r2.ratios[0]) / r1.ratios[0],
                                 std::abs(r1.ratios[2] - r2.ratios[2]) / r1.ratios[2]);
  Outcome o;
  o.value = std::max(moment_z / z, spread / spread_tol);
  o.bound = 1.0;
  o.pass = o.value <= 1.0 && tails && bracket;
  o.details = {{"samples", cfg.samples},  {"l2sq", r1.l2sq},     {"second_moment", r1.second_moment},
               {"standard_error", r1.second_moment_se}, {"z", moment_z}, {"tails", tail_rows},
               {"ratio_p1", {r1.ratios[0], r2.ratios[0]}}, {"ratio_p4", {r1.ratios[2], r2.ratios[2]}},
               {"bracket_ok", bracket},   {"seed_spread", spread}};
  return o;
}

//--- 10
Outcome check_multiplier(const RunConfig& cfg) {
  const int L = cfg.grid;
  const long band = (1L << L) / 4;
  const Corpus c = corpus_1d(cfg, L);
  const auto one = make_symbol("bilinear_constant");
  const double ti = cfg.tolerance("multiplier.identity"), tp = cfg.tolerance("multiplier.pairing");
  double product_gap = 0.0, pairing_gap = 0.0;
  for (std::size_t i = 0; i + 2 < c.size(); i += 7) {
    const GridFunction f = band_limit(c[i], band), g = band_limit(c[i + 1], band), h = c[i + 2];
    product_gap = std::max(product_gap, max_abs_diff(apply_bilinear(one, f, g), pointwise(f, g)) /
                                            std::max(1.0, max_abs(pointwise(f, g))));
    const auto p = trilinear_pairing_check(f, g, h);
    pairing_gap = std::max(pairing_gap, p.gap / std::max(1.0, std::abs(p.integral)));
  }
  const double tau = 2.0 * std::numbers::pi;
  const GridFunction cosine = GridFunction::sample(L, [&](double x) { return std::cos(tau * x); });
  const GridFunction sine = GridFunction::sample(L, [&](double x) { return std::sin(tau * x); });
  const double hilbert_gap = max_abs_diff(apply_1d(make_symbol("hilbert"), cosine), sine);
  Outcome o;
  o.value = std::max({product_gap / ti, hilbert_gap / ti, pairing_gap / tp});
  o.bound = 1.0;
  o.pass = o.value <= 1.0;
  o.details = {{"product_gap", product_gap}, {"hilbert_gap", hilbert_gap}, {"pairing_gap", pairing_gap}};
  return o;
}

//--- 11
Outcome check_coefficients(const RunConfig& cfg) {
  const double spread_tol = cfg.tolerance("coefficients.spread"), rtol = cfg.tolerance("coefficients.reassembly");
  double worst_spread = 0.0, worst_res = 0.0;
  json rows = json::array();
  for (const char* name : {"hilbert", "oscillatory"}) {
    const auto m = make_symbol(name);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    json ks = json::array();
    for (int k = 1; k <= 7; ++k) {
      const auto sc = symbol_coefficients(m, k);
      const double d = sc.decay_constant(4.0), r = reassembly_residual(m, sc);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      worst_res = std::max(worst_res, r);
      ks.push_back({{"k", k}, {"decay", d}, {"reassembly", r}});
    }
    worst_spread = std::max(worst_spread, hi / lo);
    rows.push_back({{"symbol", name}, {"scales", ks}, {"spread", hi / lo}});
  }
  Outcome o;
  o.value = std::max(worst_spread / spread_tol, worst_res / rtol);
  o.bound = 1.0;
  o.pass = o.value <= 1.0;
  o.details = {{"symbols", rows}, {"worst_spread", worst_spread}, {"worst_reassembly", worst_res}};
  return o;
}

//--- 12
struct Sweep {
  std::string name;
  std::function<NormReport(int L)> run;
};

json report_json(const NormReport& r) {
  return {{"op", r.op}, {"out", r.out.label()}, {"max_ratio", r.max_ratio}, {"drift", r.drift}, {"note", r.note}};
}

Outcome check_stability(const RunConfig& cfg) {
  const double drift_tol = cfg.tolerance("stability.drift"), eps_tol = cfg.tolerance("stability.eps_spread");
  const int L1 = cfg.grid, L2 = cfg.grid2;
  auto fam = [](FamilyKind k, int L) { return make_adapted_family(k, L - 3, L); };
  const auto L2n = NormSpec::lp(2), L1n = NormSpec::lp(1);
  std::vector<Sweep> sweeps;
  sweeps.push_back({"square", [&](int L) {
                      const auto F = fam(FamilyKind::from_pou_1, L);
                      auto r = probe_norm("S", [&](const auto& a) { return square_function(a[0], F); }, {L2n}, L2n,
                                          corpus_1d(cfg, L));
                      r.note = "scales 1.." + std::to_string(L - 3);
                      return r;
                    }});
  sweeps.push_back({"paraproduct_1p", [&](int L) {
                      ParaproductSpec s;
                      s.x = {fam(FamilyKind::low_pass, L), fam(FamilyKind::from_pou_1, L), fam(FamilyKind::from_pou_2, L)};
                      s.eps = EpsilonSequence::rademacher(L - 3, cfg.seed);
                      auto r = probe_norm("T1", [&](const auto& a) { return paraproduct_1p(s, a[0], a[1]); }, {L2n, L2n},
                                          L1n, corpus_1d(cfg, L));
                      r.note = "slot 1 low-pass; scales 1.." + std::to_string(L - 3);
                      return r;
                    }});
  sweeps.push_back({"hybrid_SS", [&](int L) {
                      const FamilyPair P{fam(FamilyKind::from_pou_1, L), fam(FamilyKind::from_pou_1, L)};
                      auto r = probe_norm("SS", [&](const auto& a) { return hybrid(a[0], P, HybridKind::SS); }, {L2n},
                                          L2n, corpus_2d(cfg, L));
                      r.note = "scales 1.." + std::to_string(L - 3) + " per axis";
                      return r;
                    }});
  sweeps.push_back({"paraproduct_2p", [&](int L) {
                      ParaproductSpec s;
                      s.params = 2;
                      s.slot_a = 1;
                      s.slot_b = 2;
                      s.x = {fam(FamilyKind::low_pass, L), fam(FamilyKind::from_pou_1, L), fam(FamilyKind::from_pou_2, L)};
                      s.y = {fam(FamilyKind::from_pou_1, L), fam(FamilyKind::low_pass, L), fam(FamilyKind::from_pou_2, L)};
                      s.rect_eps = RectEpsilon::rademacher(L - 3, L - 3, cfg.seed);
                      auto r = probe_norm("T2", [&](const auto& a) { return paraproduct_2p(s, a[0], a[1]); }, {L2n, L2n},
                                          L1n, corpus_2d(cfg, L));
                      r.note = "slots (1, 2); scales 1.." + std::to_string(L - 3) + " per axis";
                      return r;
                    }});

  Outcome o;
  o.pass = true;
  json rows = json::array();
  double worst = 0.0;
  for (const auto& s : sweeps) {
    const bool two_d = s.name == "hybrid_SS" || s.name == "paraproduct_2p";
    const int L = two_d ? L2 : L1;
    const NormReport a = s.run(L);
    NormReport b = s.run(L + 1);
    const double d = compare_resolutions(a, b);
    const bool finite = std::isfinite(a.max_ratio) && std::isfinite(b.max_ratio) && a.max_ratio > 0.0;
    o.pass = o.pass && finite && d <= drift_tol;
    worst = std::max(worst, d / drift_tol);
    rows.push_back({{"name", s.name}, {"L", {L, L + 1}}, {"low", report_json(a)}, {"high", report_json(b)}});
  }
  // Linearization over twenty ε draws at both resolutions.
  json eps_rows = json::array();
  std::vector<double> means;
  double spread = 0.0;
  for (int L : {L1, L1 + 1}) {
    const auto F1 = fam(FamilyKind::from_pou_1, L), F2 = fam(FamilyKind::from_pou_2, L);
    const Corpus c = corpus_1d(cfg, L);
    std::vector<double> maxima;
    for (int d = 0; d < 20; ++d) {
      const auto eps = EpsilonSequence::rademacher(L - 3, mix_seed(cfg.seed, 1000 + d));
      maxima.push_back(probe_norm("T_eps", [&](const auto& a) { return linearize(a[0], F1, F2, eps); }, {L2n}, L2n, c)
                           .max_ratio);
    }
    const auto [lo, hi] = std::minmax_element(maxima.begin(), maxima.end());
    double mean = 0.0;
    for (double v : maxima) mean += v / 20.0;
    spread = std::max(spread, (*hi - *lo) / mean);
    means.push_back(mean);
    eps_rows.push_back({{"L", L}, {"min", *lo}, {"max", *hi}, {"mean", mean}});
  }
  const double eps_drift = std::abs(means[1] - means[0]) / means[0];
  o.pass = o.pass && spread <= eps_tol && eps_drift <= drift_tol;
  worst = std::max({worst, spread / eps_tol, eps_drift / drift_tol});
  o.value = worst;
  o.bound = 1.0;
  o.details = {{"sweeps", rows}, {"linearization", eps_rows}, {"eps_spread", spread}, {"eps_drift", eps_drift}};
  return o;
}

//--- 13
Outcome check_tensor(const RunConfig& cfg) {
  const int L = cfg.grid2;
  const double tol = cfg.tolerance("tensor.factorization");
  auto fam = [&](FamilyKind k) { return make_adapted_family(k, L - 3, L); };
  const Corpus c = corpus_1d(cfg, L);
  const auto P1 = fam(FamilyKind::from_pou_1), P2 = fam(FamilyKind::from_pou_2), LP = fam(FamilyKind::low_pass);
  const FamilyPair pair{P1, P1};

  ParaproductSpec sx, sy, s2;
  sx.x = {LP, P1, P2};
  sx.slot_a = 1;
  sx.eps = EpsilonSequence::rademacher(L - 3, cfg.seed);
  sy.x = {P1, LP, P2};
  sy.slot_a = 2;
  sy.eps = EpsilonSequence::rademacher(L - 3, mix_seed(cfg.seed, 5));
  s2.params = 2;
  s2.slot_a = 1;
  s2.slot_b = 2;
  s2.x = sx.x;
  s2.y = sy.x;
  s2.rect_eps = RectEpsilon::separable(sx.eps, sy.eps);

  double ss_gap = 0.0, para_gap = 0.0;
  std::size_t cases = 0;
  for (std::size_t i = 0; i + 3 < c.size(); i += 9, ++cases) {
    const GridFunction &f1 = c[i], &f2 = c[i + 1], &g1 = c[i + 2], &g2 = c[i + 3];
    const GridFunction ss = hybrid(tensor(f1, f2), pair, HybridKind::SS);
    const GridFunction sep = tensor(square_function(f1, P1), square_function(f2, P1));
    ss_gap = std::max(ss_gap, max_abs_diff(ss, sep) / std::max(1.0, max_abs(sep)));
    const GridFunction t2 = paraproduct_2p(s2, tensor(f1, f2), tensor(g1, g2));
    const GridFunction tt = tensor(paraproduct_1p(sx, f1, g1), paraproduct_1p(sy, f2, g2));
    para_gap = std::max(para_gap, max_abs_diff(t2, tt) / std::max(1.0, max_abs(tt)));
  }
  Outcome o;
  o.value = std::max(ss_gap, para_gap);
  o.bound = tol;
  o.pass = o.value <= tol && cases > 0;
  o.details = {{"L", L}, {"cases", cases}, {"ss_gap", ss_gap}, {"paraproduct_gap", para_gap}};
  return o;
}

struct Registered {
  std::string id;
  std::string title;
  Outcome (*run)(const RunConfig&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {"pou", "partition-of-unity identities", check_pou},
      {"fs-sum", "vector maximal counterexample, r = 1", check_fs_sum},
      {"fs-growth", "vector maximal counterexample, r-growth", check_fs_growth},
      {"maximal-oracle", "maximal function oracle and pointwise chain", check_maximal_oracle},
      {"cz", "Calderon-Zygmund invariants", check_cz},
      {"weak11", "weak (1,1) ceiling for M", check_weak11},
      {"rearrange", "rearrangement exactness", check_rearrange},
      {"llogl", "maximal function and L log L", check_llogl},
      {"khinchine", "Khinchine moments and tails", check_khinchine},
      {"multiplier", "multiplier identities", check_multiplier},
      {"coefficients", "symbol coefficient decay and reassembly", check_coefficients},
      {"stability", "boundedness stability sweeps", check_stability},
      {"tensor", "tensor factorizations", check_tensor},
  };
  return r;
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& r : registry()) v.push_back(r.id);
    return v;
  }();
  return ids;
}

CheckResult run_check(const std::string& id, const RunConfig& cfg) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Registered& r) { return r.id == id; });
  if (it == reg.end()) throw UsageError("unknown check '" + id + "'");
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult out;
  out.id = it->id;
  out.title = it->title;
  try {
    Outcome o = it->run(cfg);
    out.value = o.value;
    out.bound = o.bound;
    out.pass = o.pass;
    o.details["seed"] = cfg.seed;
    o.details["config_hash"] = cfg.hash();
    out.details = o.details.dump(2);
  } catch (const Error& e) {
    out.pass = false;
    out.details = json{{"error", e.what()}, {"seed", cfg.seed}, {"config_hash", cfg.hash()}}.dump(2);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SuiteResult run_suite(const RunConfig& cfg, const std::string& only) {
  SuiteResult r;
  r.config_hash = cfg.hash();
  if (!only.empty()) {
    r.checks.push_back(run_check(only, cfg));
    return r;
  }
  for (const auto& id : check_ids()) r.checks.push_back(run_check(id, cfg));
  return r;
}

void write_suite(const SuiteResult& r, const RunConfig& cfg, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir + "/summary.csv");
  if (!csv) throw Error("cannot write '" + dir + "/summary.csv'");
  csv.precision(10);
  csv << "check_id,value,bound,pass\n";
  for (const auto& c : r.checks) {
    csv << c.id << "," << c.value << "," << c.bound << "," << (c.pass ? "true" : "false") << "\n";
    json j = json::parse(c.details);
    j["id"] = c.id;
    j["title"] = c.title;
    j["value"] = c.value;
    j["bound"] = c.bound;
    j["pass"] = c.pass;
    j["seconds"] = c.seconds;
    std::ofstream(dir + "/" + c.id + ".json") << j.dump(2) << "\n";
  }
  save_config(cfg, dir + "/run_config.toml");
}

}  // namespace lpk
