#pragma once

#include <optional>
#include <vector>

#include "lpk/grid.hpp"

namespace lpk {

// Decreasing rearrangement as a step function: value a_m on [t_{m-1}, t_m), zero past t_M.
// Zero values are dropped, so t_M is the measure of the support.
class StepProfile {
 public:
  StepProfile() = default;
  StepProfile(std::vector<double> breakpoints, std::vector<double> values);

  // breakpoints()[0] = 0 and breakpoints().size() = values().size() + 1.
  const std::vector<double>& breakpoints() const { return t_; }
  const std::vector<double>& values() const { return a_; }
  std::size_t steps() const { return a_.size(); }
  double support() const { return t_.back(); }

  // f*(t), right-continuous.
  double at(double t) const;
  // ∫_0^t f*.
  double integral(double t) const;
  // f**(t) = integral(t) / t.
  double average(double t) const;
  // μ(λ) = |{f* > λ}|.
  double distribution(double lambda) const;
  double lp_norm(double p) const;
  double sup() const { return a_.empty() ? 0.0 : a_.front(); }

 private:
  std::vector<double> t_{0.0};
  std::vector<double> a_;
  std::vector<double> prefix_{0.0};
};

StepProfile rearrangement(const GridFunction& f);
StepProfile rearrangement(std::vector<double> magnitudes);

// f^{(*,n)}(t) = (1/t) ∫_0^t f*(s) log(t/s)^{n-2} / (n-2)! ds for n ≥ 2, from the profile.
double n_star_exact(const StepProfile& p, int n, double t);

inline constexpr std::size_t kCurvePoints = 4096;
inline constexpr double kCurveStart = 1e-6;

// Samples of f^{(*,n)} on a log-spaced grid from kCurveStart to 1.
struct RearrangementCurve {
  int order = 2;
  std::vector<double> t;
  std::vector<double> values;
  std::optional<StepProfile> exact;  // set for order 2
  double exact_head = -1.0;          // ∫_0^{t[0]} f^{(*,n)}, from the profile

  // ∫_0^1 (f^{(*,n)})^p, with the first cell integrated exactly for p = 1.
  double integral(double p = 1.0) const;
  double lp_norm(double p) const;
};

RearrangementCurve n_star(const StepProfile& p, int n, std::size_t points = kCurvePoints);

enum class ZygmundMethod { iterated, closed_form };

// ‖f‖_{L(log L)^n} = ∫_0^1 f^{(*,n+1)} = (1/n!) ∫_0^1 f* log(1/t)^n.
double zygmund_norm(const StepProfile& p, int n, ZygmundMethod method = ZygmundMethod::closed_form);
double zygmund_norm(const GridFunction& f, int n, ZygmundMethod method = ZygmundMethod::closed_form);

// ‖f‖_{p,q}; q = infinity gives the weak norm sup_t t^{1/p} f*(t).
double lorentz_norm(const StepProfile& prof, double p, double q);
double lorentz_norm(const GridFunction& f, double p, double q);

// max over super-level sets E of ‖f χ_E‖_r / |E|^{1/r - 1/p}, for 0 < r < p.
double kolmogorov_functional(const StepProfile& prof, double p, double r);
double kolmogorov_functional(const GridFunction& f, double p, double r);

struct Split {
  GridFunction g;  // unbounded part, small in L¹
  GridFunction h;  // bounded by f*(t)
  double value = 0.0;  // ‖g‖₁ + t ‖h‖_∞
};

Split optimal_l1_linf_split(const GridFunction& f, double t);

}  // namespace lpk
