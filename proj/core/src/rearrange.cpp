#include "lpk/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "lpk/errors.hpp"

namespace lpk {

namespace {

// e^{-x} Σ_{i=0}^{m} x^i / i!, the upper tail of a unit-rate Gamma(m+1) law.
double gamma_tail(int m, double x) {
  if (std::isinf(x)) return 0.0;
  double term = 1.0, sum = 1.0;
  for (int i = 1; i <= m; ++i) {
    term *= x / i;
    sum += term;
  }
  return std::exp(-x) * sum;
}

// (1/n!) ∫_0^x log(1/s)^n ds = x Σ_{i=0}^{n} log(1/x)^i / i!.
double log_power_antiderivative(int n, double x) {
  if (x <= 0.0) return 0.0;
  const double l = std::log(1.0 / x);
  double term = 1.0, sum = 1.0;
  for (int i = 1; i <= n; ++i) {
    term *= l / i;
    sum += term;
  }
  return x * sum;
}

// h e^h - (e^h - 1), accurate for small h.
double tilt(double h) {
  if (h > 0.1) return h * std::exp(h) - std::expm1(h);
  double term = h, sum = 0.0;
  for (int k = 2; k < 20; ++k) {
    term *= h / k;
    sum += term * (k - 1);
  }
  return sum;
}

// ∫ over a log cell [e^a, e^b] of g, with g linear in log t between the end values.
double log_cell(double ta, double tb, double ga, double gb) {
  const double h = std::log(tb / ta);
  if (h <= 0.0) return 0.0;
  return ga * (tb - ta) + (gb - ga) / h * ta * tilt(h);
}

std::vector<double> log_grid(std::size_t points) {
  if (points < 2) throw DomainError("curve grid needs at least two points");
  std::vector<double> t(points);
  const double span = std::log(1.0 / kCurveStart);
  for (std::size_t i = 0; i < points; ++i)
    t[i] = kCurveStart * std::exp(span * static_cast<double>(i) / static_cast<double>(points - 1));
  t.back() = 1.0;
  return t;
}

}  // namespace

StepProfile::StepProfile(std::vector<double> breakpoints, std::vector<double> values)
    : t_(std::move(breakpoints)), a_(std::move(values)) {
  if (t_.size() != a_.size() + 1 || t_.front() != 0.0) throw ContractError("profile needs one more breakpoint than values");
  for (std::size_t m = 0; m < a_.size(); ++m) {
    if (!(t_[m + 1] > t_[m])) throw ContractError("profile breakpoints must increase");
    if (!(a_[m] >= 0.0) || (m > 0 && !(a_[m] < a_[m - 1]))) throw ContractError("profile values must strictly decrease");
  }
  if (t_.back() > 1.0 + 1e-12) throw ContractError("profile support exceeds 1");
  prefix_.assign(a_.size() + 1, 0.0);
  for (std::size_t m = 0; m < a_.size(); ++m) prefix_[m + 1] = prefix_[m] + a_[m] * (t_[m + 1] - t_[m]);
}

double StepProfile::at(double t) const {
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  if (it == t_.begin() || it == t_.end()) return t < 0.0 ? sup() : 0.0;
  return a_[static_cast<std::size_t>(it - t_.begin()) - 1];
}

double StepProfile::integral(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= t_.back()) return prefix_.back();
  const std::size_t m = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin()) - 1;
  return prefix_[m] + a_[m] * (t - t_[m]);
}

double StepProfile::average(double t) const { return t <= 0.0 ? sup() : integral(t) / t; }

double StepProfile::distribution(double lambda) const {
  // values are decreasing: count those above λ
  const auto it = std::partition_point(a_.begin(), a_.end(), [&](double a) { return a > lambda; });
  return t_[static_cast<std::size_t>(it - a_.begin())];
}

double StepProfile::lp_norm(double p) const {
  if (std::isinf(p)) return sup();
  if (!(p > 0.0)) throw DomainError("exponent must be positive");
  double s = 0.0;
  for (std::size_t m = 0; m < a_.size(); ++m) s += std::pow(a_[m], p) * (t_[m + 1] - t_[m]);
  return std::pow(s, 1.0 / p);
}

StepProfile rearrangement(std::vector<double> magnitudes) {
  const double n = static_cast<double>(magnitudes.size());
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  std::vector<double> t{0.0}, a;
  std::size_t i = 0;
  while (i < magnitudes.size() && magnitudes[i] > 0.0) {
    std::size_t j = i;
    while (j < magnitudes.size() && magnitudes[j] == magnitudes[i]) ++j;
    a.push_back(magnitudes[i]);
    t.push_back(static_cast<double>(j) / n);
    i = j;
  }
  return StepProfile(std::move(t), std::move(a));
}

StepProfile rearrangement(const GridFunction& f) { return rearrangement(f.magnitudes()); }

double n_star_exact(const StepProfile& p, int n, double t) {
  if (n < 1) throw DomainError("order must be at least 1");
  if (n == 1) return p.at(t);
  if (!(t > 0.0)) return p.sup();
  const int m = n - 2;
  const auto& tb = p.breakpoints();
  const auto& a = p.values();
  double s = 0.0;
  for (std::size_t k = 0; k < a.size() && tb[k] < t; ++k) {
    const double lo = tb[k], hi = std::min(tb[k + 1], t);
    const double far = lo > 0.0 ? gamma_tail(m, std::log(t / lo)) : 0.0;
    s += a[k] * (gamma_tail(m, std::log(t / hi)) - far);
  }
  return s;
}

double RearrangementCurve::integral(double p) const {
  if (t.empty()) return 0.0;
  auto pw = [&](double v) { return p == 1.0 ? v : std::pow(v, p); };
  // first cell: exact for p = 1 through the next order, else the left-end value
  double s = p == 1.0 && exact_head >= 0.0 ? exact_head : t.front() * pw(values.front());
  for (std::size_t i = 0; i + 1 < t.size(); ++i) s += log_cell(t[i], t[i + 1], pw(values[i]), pw(values[i + 1]));
  return s;
}

double RearrangementCurve::lp_norm(double p) const { return std::pow(integral(p), 1.0 / p); }

RearrangementCurve n_star(const StepProfile& p, int n, std::size_t points) {
  if (n < 2) throw DomainError("n-star order must be at least 2");
  RearrangementCurve c;
  c.order = n;
  c.t = log_grid(points);
  c.values.resize(points);
  for (std::size_t i = 0; i < points; ++i) c.values[i] = p.average(c.t[i]);
  const double t0 = c.t.front();
  for (int k = 3; k <= n; ++k) {
    std::vector<double> next(points);
    double acc = t0 * n_star_exact(p, k, t0);
    next[0] = acc / t0;
    for (std::size_t i = 0; i + 1 < points; ++i) {
      acc += log_cell(c.t[i], c.t[i + 1], c.values[i], c.values[i + 1]);
      next[i + 1] = acc / c.t[i + 1];
    }
    c.values = std::move(next);
  }
  c.exact_head = t0 * n_star_exact(p, n + 1, t0);
  if (n == 2) c.exact = p;
  return c;
}

double zygmund_norm(const StepProfile& p, int n, ZygmundMethod method) {
  if (n < 0) throw DomainError("Zygmund order must be nonnegative");
  if (n == 0 || method == ZygmundMethod::closed_form) {
    const auto& t = p.breakpoints();
    const auto& a = p.values();
    double s = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m)
      s += a[m] * (log_power_antiderivative(n, t[m + 1]) - log_power_antiderivative(n, t[m]));
    return s;
  }
  return n_star(p, n + 1).integral();
}

double zygmund_norm(const GridFunction& f, int n, ZygmundMethod method) {
  return zygmund_norm(rearrangement(f), n, method);
}

double lorentz_norm(const StepProfile& prof, double p, double q) {
  if (!(p > 0.0) || std::isinf(p)) throw DomainError("Lorentz p must lie in (0, inf)");
  if (!(q > 0.0)) throw DomainError("Lorentz q must lie in (0, inf]");
  const auto& t = prof.breakpoints();
  const auto& a = prof.values();
  if (std::isinf(q)) {
    double best = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) best = std::max(best, a[m] * std::pow(t[m + 1], 1.0 / p));
    return best;
  }
  double s = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m)
    s += std::pow(a[m], q) * (p / q) * (std::pow(t[m + 1], q / p) - std::pow(t[m], q / p));
  return std::pow(s, 1.0 / q);
}

double lorentz_norm(const GridFunction& f, double p, double q) { return lorentz_norm(rearrangement(f), p, q); }

double kolmogorov_functional(const StepProfile& prof, double p, double r) {
  if (!(r > 0.0) || !(r < p) || std::isinf(p)) throw DomainError("Kolmogorov functional needs 0 < r < p < inf");
  const double inv_s = 1.0 / r - 1.0 / p;
  const auto& t = prof.breakpoints();
  const auto& a = prof.values();
  double acc = 0.0, best = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    acc += std::pow(a[m], r) * (t[m + 1] - t[m]);
    best = std::max(best, std::pow(acc, 1.0 / r) / std::pow(t[m + 1], inv_s));
  }
  return best;
}

double kolmogorov_functional(const GridFunction& f, double p, double r) {
  return kolmogorov_functional(rearrangement(f), p, r);
}

Split optimal_l1_linf_split(const GridFunction& f, double t) {
  if (!(t > 0.0) || t > 1.0) throw DomainError("split parameter must lie in (0, 1]");
  const double lambda = rearrangement(f).at(t);
  Split s{GridFunction::zeros(f.log_sizes()), GridFunction::zeros(f.log_sizes()), 0.0};
  double l1 = 0.0, sup = 0.0;
  for (std::size_t i = 0; i < f.count(); ++i) {
    const double r = std::abs(f[i]);
    if (r == 0.0) continue;
    const cplx sign = f[i] / r;
    s.g[i] = sign * std::max(r - lambda, 0.0);
    s.h[i] = sign * std::min(r, lambda);
    l1 += std::max(r - lambda, 0.0);
    sup = std::max(sup, std::min(r, lambda));
  }
  s.value = l1 / static_cast<double>(f.count()) + t * sup;
  return s;
}

}  // namespace lpk
