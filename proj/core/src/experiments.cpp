#include "lpk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lpk/errors.hpp"
#include "lpk/maximal.hpp"
#include "lpk/rearrange.hpp"

namespace lpk {

Interval wilson_interval(std::size_t k, std::size_t n, double z) {
  if (n == 0) return {};
  const double nn = static_cast<double>(n), ph = static_cast<double>(k) / nn, z2 = z * z;
  const double centre = (ph + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

KhinchineReport khinchine_experiment(const std::vector<double>& a, const std::vector<double>& p, std::size_t samples,
                                     std::uint64_t seed, const std::vector<double>& t) {
  KhinchineReport r;
  r.samples = samples;
  r.seed = seed;
  r.p = p;
  for (double v : a) r.l2sq += v * v;
  if (!(r.l2sq > 0.0)) throw DomainError("coefficient vector must be nonzero");
  if (samples < 2) throw DomainError("need at least two samples");
  const double l2 = std::sqrt(r.l2sq);
  std::mt19937_64 rng(seed);
  std::vector<double> moments(p.size(), 0.0);
  std::vector<std::size_t> exceed(t.size(), 0);
  double m2 = 0.0, m4 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    double S = 0.0;
    for (double v : a) S += (rng() >> 63) ? v : -v;
    const double A = std::abs(S);
    m2 += S * S;
    m4 += S * S * S * S;
    for (std::size_t i = 0; i < p.size(); ++i) moments[i] += std::pow(A, p[i]);
    for (std::size_t i = 0; i < t.size(); ++i) exceed[i] += A / l2 > t[i];
  }
  const double n = static_cast<double>(samples);
  r.second_moment = m2 / n;
  r.second_moment_se = std::sqrt(std::max(0.0, m4 / n - r.second_moment * r.second_moment) / (n - 1));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.p_norms.push_back(std::pow(moments[i] / n, 1.0 / p[i]));
    r.ratios.push_back(r.p_norms.back() / l2);
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    r.tails.push_back({t[i], static_cast<double>(exceed[i]) / n, wilson_interval(exceed[i], samples),
                       4.0 * std::exp(-t[i] * t[i] / 4.0)});
  return r;
}

CounterexampleReport fs_sum_counterexample(int L, long N) {
  const long size = 1L << L;
  if (N < 1 || N > size || (N & (N - 1)) != 0) throw DomainError("N must be a power of two no larger than the grid");
  std::vector<double> total(static_cast<std::size_t>(size), 0.0);
  const long w = size / N;
  for (long k = 0; k < N; ++k) {
    std::vector<double> f(static_cast<std::size_t>(size), 0.0);
    std::fill(f.begin() + k * w, f.begin() + (k + 1) * w, 1.0);
    const auto m = hl_line(f);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += m[i];
  }
  return {"fs-sum", N, 1.0, *std::min_element(total.begin(), total.end()), std::log(static_cast<double>(N)) - 1.0};
}

CounterexampleReport fs_growth_counterexample(int L, int K, double r) {
  if (K < 1 || K + 1 > L) throw DomainError("growth family needs K + 1 <= L");
  if (!(r >= 1.0)) throw DomainError("exponent r must be at least 1");
  const long size = 1L << L;
  std::vector<GridFunction> fs;
  for (int k = 1; k <= K; ++k) {
    const long lo = size >> (k + 1), hi = size >> k;
    GridFunction f = GridFunction::zeros({L});
    for (long i = lo; i < hi; ++i) f[static_cast<std::size_t>(i)] = 1.0;
    fs.push_back(std::move(f));
  }
  const GridFunction v = vector_maximal(fs, r, MaximalKind::hl());
  double worst = std::numeric_limits<double>::infinity();
  for (long i = 0; i < (size >> K); ++i) worst = std::min(worst, std::abs(v[static_cast<std::size_t>(i)]));
  return {"fs-growth", K, r, worst, std::pow(static_cast<double>(K), 1.0 / r) / 2.0};
}

LloglReport llogl_maximal_experiment(const Corpus& corpus, double t_lo, double t_hi) {
  if (corpus.log_sizes.size() != 1) throw DimensionError("the maximal/LlogL experiment runs on a 1D corpus");
  LloglReport rep;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.curve_min = std::numeric_limits<double>::infinity();
  rep.curve_max = 0.0;
  for (const auto& m : corpus.members) {
    const StepProfile pf = rearrangement(m.f);
    if (pf.steps() == 0) continue;
    const GridFunction Mf = maximal(m.f, MaximalKind::hl());
    const StepProfile pm = rearrangement(Mf);
    LloglRow row;
    row.label = m.label;
    row.maximal_l1 = pm.integral(1.0);
    row.llogl = zygmund_norm(pf, 1);
    row.ratio = row.maximal_l1 / row.llogl;
    // Both rearrangements are constant between consecutive cuts and f** decreases,
    // so the ratio's extremes sit at the cuts: the infimum from the right, the supremum from the left.
    std::vector<double> cuts{t_lo, t_hi};
    for (const auto* p : {&pf, &pm})
      for (double b : p->breakpoints())
        if (b > t_lo && b < t_hi) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    row.curve_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      row.curve_min = std::min(row.curve_min, pm.at(cuts[i]) / pf.average(cuts[i]));
      const double left = std::nextafter(cuts[i + 1], 0.0);
      row.curve_max = std::max(row.curve_max, pm.at(left) / pf.average(cuts[i + 1]));
    }
    rep.curve_min = std::min(rep.curve_min, row.curve_min);
    rep.curve_max = std::max(rep.curve_max, row.curve_max);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

double strong_maximal_endpoint(const Corpus& corpus) {
  if (corpus.log_sizes.size() != 2) throw DimensionError("the strong maximal endpoint runs on a 2D corpus");
  double worst = 0.0;
  for (const auto& m : corpus.members) {
    const double z = zygmund_norm(m.f, 2);
    if (!(z > 0.0)) continue;
    worst = std::max(worst, maximal(m.f, MaximalKind::strong()).mean_abs() / z);
  }
  return worst;
}

}  // namespace lpk
