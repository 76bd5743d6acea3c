#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpk/corpus.hpp"

namespace lpk {

// Wilson score interval for k successes in n trials.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};
Interval wilson_interval(std::size_t k, std::size_t n, double z = 1.96);

struct TailRow {
  double t = 0.0;
  double frequency = 0.0;
  Interval wilson;
  double bound = 0.0;  // 4 e^{-t²/4}
};

struct KhinchineReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double l2sq = 0.0;           // ‖a‖₂²
  double second_moment = 0.0;  // mean S²
  double second_moment_se = 0.0;
  std::vector<double> p;
  std::vector<double> p_norms;  // (E|S|^p)^{1/p}
  std::vector<double> ratios;   // p_norms / ‖a‖₂
  std::vector<TailRow> tails;   // for S / ‖a‖₂
};

// S = Σ a_j r_j over seeded Rademacher draws.
KhinchineReport khinchine_experiment(const std::vector<double>& a, const std::vector<double>& p, std::size_t samples,
                                     std::uint64_t seed, const std::vector<double>& t = {1.0, 2.0, 3.0});

struct CounterexampleReport {
  std::string name;
  long size = 0;  // N for the sum, K for the growth family
  double r = 1.0;
  double value = 0.0;
  double bound = 0.0;
  bool pass() const { return value >= bound; }
};

// min_x Σ_{k ≤ N} M f_k(x) for f_k = χ_{[(k-1)/N, k/N)}, against log N - 1.
CounterexampleReport fs_sum_counterexample(int L, long N);
// min over x in [0, 2^-K) of (Σ_{k ≤ K} (M f_k)^r)^{1/r} for f_k = χ_{[2^{-k-1}, 2^{-k})}, against K^{1/r} / 2.
CounterexampleReport fs_growth_counterexample(int L, int K, double r);

struct LloglRow {
  std::string label;
  double maximal_l1 = 0.0;  // ‖M f‖₁
  double llogl = 0.0;       // ‖f‖_{L log L}
  double ratio = 0.0;
  double curve_min = 0.0;   // inf and sup of (M f)*(t) / f**(t) over the window
  double curve_max = 0.0;
};

struct LloglReport {
  double t_lo = 1.0 / 64;
  double t_hi = 0.5;
  std::vector<LloglRow> rows;
  double curve_min = 0.0;
  double curve_max = 0.0;
};

LloglReport llogl_maximal_experiment(const Corpus& corpus, double t_lo = 1.0 / 64, double t_hi = 0.5);

// max over a 2D corpus of ‖M_S f‖₁ / ‖f‖_{L(log L)^2}, with M_S the strong maximal function.
double strong_maximal_endpoint(const Corpus& corpus);

}  // namespace lpk
