#include "lpk/cz.hpp"

#include <algorithm>
#include <cmath>

#include "lpk/errors.hpp"
#include "lpk/maximal.hpp"
#include "lpk/norms.hpp"

namespace lpk {

namespace {

struct Stop {
  std::vector<DyadicInterval> intervals;
  std::vector<double> averages;
};

// Maximal dyadic intervals (levels 1..L) whose mean of |f| strictly exceeds t.
Stop stopping(const std::vector<double>& mags, int L, double t) {
  const std::size_t N = mags.size();
  std::vector<double> prefix(N + 1, 0.0);
  for (std::size_t i = 0; i < N; ++i) prefix[i + 1] = prefix[i] + mags[i];
  Stop out;
  std::vector<DyadicInterval> stack = {DyadicInterval::make(1, 1), DyadicInterval::make(1, 0)};
  while (!stack.empty()) {
    DyadicInterval I = stack.back();
    stack.pop_back();
    const std::size_t s = I.first_sample(L), n = I.sample_count(L);
    const double avg = (prefix[s + n] - prefix[s]) / static_cast<double>(n);
    if (avg > t) {
      out.intervals.push_back(I);
      out.averages.push_back(avg);
    } else if (I.level < L) {
      stack.push_back(I.child(1));
      stack.push_back(I.child(0));
    }
  }
  return out;
}

void require_1d(const GridFunction& f) {
  if (f.dims() != 1) throw DimensionError("stopping-time decompositions act on 1D functions");
}

}  // namespace

StoppingCover cz_cover(const GridFunction& f, double alpha) {
  require_1d(f);
  if (!(alpha > 0.0)) throw ThresholdError("cover threshold must be positive");
  const int L = f.log_sizes()[0];
  const std::size_t N = f.size();
  StoppingCover c;
  c.alpha = alpha;
  const GridFunction M = maximal(f, MaximalKind::hl());
  bool any = false;
  for (std::size_t i = 0; i < N; ++i) any = any || M[i].real() > alpha;
  if (!any) return c;
  Stop s = stopping(f.magnitudes(), L, alpha / 4);
  c.intervals = s.intervals;
  c.averages = s.averages;
  for (double a : c.averages) c.average_ok = c.average_ok && a >= alpha / 4;
  std::vector<TorusInterval> stars;
  for (const auto& I : c.intervals) stars.push_back(TorusInterval::of(I).star());
  for (std::size_t i = 0; i < N; ++i) {
    if (!(M[i].real() > alpha)) continue;
    bool in = std::any_of(stars.begin(), stars.end(), [&](const TorusInterval& S) { return S.contains_sample(i, N); });
    c.cover_ok = c.cover_ok && in;
  }
  return c;
}

CZDecomposition cz_decompose(const GridFunction& f, double alpha) {
  require_1d(f);
  const double l1 = norm(f, NormSpec::lp(1));
  if (!(alpha > l1))
    throw ThresholdError("decomposition threshold " + std::to_string(alpha) + " must exceed ||f||_1 = " + std::to_string(l1));
  const int L = f.log_sizes()[0];
  CZDecomposition d;
  d.alpha = alpha;
  Stop s = stopping(f.magnitudes(), L, alpha);
  std::vector<std::size_t> order(s.intervals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.intervals[a].first_sample(L) < s.intervals[b].first_sample(L);
  });
  d.good = f;
  for (std::size_t idx : order) {
    const DyadicInterval I = s.intervals[idx];
    d.intervals.push_back(I);
    d.averages.push_back(s.averages[idx]);
    const std::size_t a = I.first_sample(L), n = I.sample_count(L);
    cplx mean{};
    for (std::size_t x = a; x < a + n; ++x) mean += f[x];
    mean /= static_cast<double>(n);
    BadPiece piece{I, mean, GridFunction::zeros({L})};
    for (std::size_t x = a; x < a + n; ++x) {
      piece.b[x] = f[x] - mean;
      d.good[x] = mean;
    }
    d.bad.push_back(std::move(piece));
  }
  return d;
}

bool CZCheck::ok() const {
  return disjoint && reconstruction <= reconstruction_tol && supported && max_bad_mean <= 1e-12 && measure <= measure_bound &&
         averages_in_range && good_l2sq <= good_bound && worst_bad_ratio <= 1.0;
}

CZCheck check_cz(const GridFunction& f, const CZDecomposition& d) {
  CZCheck c;
  const int L = f.log_sizes()[0];
  const std::size_t N = f.size();
  for (std::size_t i = 0; i < d.intervals.size(); ++i)
    for (std::size_t j = i + 1; j < d.intervals.size(); ++j)
      c.disjoint = c.disjoint && relate(d.intervals[i], d.intervals[j]) == Relation::disjoint;
  GridFunction sum = d.good;
  for (const auto& p : d.bad) {
    sum += p.b;
    const std::size_t a = p.interval.first_sample(L), n = p.interval.sample_count(L);
    for (std::size_t x = 0; x < N; ++x)
      if ((x < a || x >= a + n) && p.b[x] != 0.0) c.supported = false;
    c.max_bad_mean = std::max(c.max_bad_mean, std::abs(p.b.mean()));
    c.measure += p.interval.length();
    const double l1 = norm(p.b, NormSpec::lp(1));
    c.worst_bad_ratio = std::max(c.worst_bad_ratio, l1 / (4 * d.alpha * p.interval.length()));
  }
  c.reconstruction = max_abs_diff(sum, f);
  c.reconstruction_tol = 1e-12 * std::max(1.0, max_abs(f));
  const double l1 = norm(f, NormSpec::lp(1));
  c.measure_bound = l1 / d.alpha;
  for (double a : d.averages) c.averages_in_range = c.averages_in_range && a > d.alpha && a <= 2 * d.alpha;
  const double g2 = norm(d.good, NormSpec::lp(2));
  c.good_l2sq = g2 * g2;
  c.good_bound = 5 * d.alpha * l1;
  return c;
}

}  // namespace lpk
