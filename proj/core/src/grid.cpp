#include "lpk/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lpk/errors.hpp"

namespace lpk {

namespace {

std::size_t total(const std::vector<int>& log_sizes) {
  std::size_t n = 1;
  for (int L : log_sizes) n <<= L;
  return n;
}

void check_shape(const std::vector<int>& log_sizes) {
  if (log_sizes.empty() || log_sizes.size() > 2)
    throw DimensionError("grid functions have 1 or 2 axes, got " + std::to_string(log_sizes.size()));
  for (int L : log_sizes)
    if (L < kMinLog || L > kMaxLog)
      throw DimensionError("axis exponent " + std::to_string(L) + " outside [4, 13]");
}

}  // namespace

GridFunction::GridFunction(std::vector<int> log_sizes, cvec values)
    : log_sizes_(std::move(log_sizes)), values_(std::move(values)) {
  check_shape(log_sizes_);
  if (values_.size() != total(log_sizes_))
    throw DimensionError("value count " + std::to_string(values_.size()) + " does not match axis sizes");
}

GridFunction GridFunction::zeros(std::vector<int> log_sizes) {
  check_shape(log_sizes);
  std::size_t n = total(log_sizes);
  return GridFunction(std::move(log_sizes), cvec(n));
}

GridFunction GridFunction::constant(std::vector<int> log_sizes, cplx c) {
  GridFunction g = zeros(std::move(log_sizes));
  std::fill(g.values_.begin(), g.values_.end(), c);
  return g;
}

GridFunction GridFunction::sample(int L, const std::function<cplx(double)>& f) {
  GridFunction g = zeros({L});
  const std::size_t N = g.size();
  for (std::size_t j = 0; j < N; ++j) g.values_[j] = f(static_cast<double>(j) / N);
  return g;
}

GridFunction GridFunction::sample(int L0, int L1, const std::function<cplx(double, double)>& f) {
  GridFunction g = zeros({L0, L1});
  const std::size_t N0 = g.size(0), N1 = g.size(1);
  for (std::size_t i = 0; i < N0; ++i)
    for (std::size_t j = 0; j < N1; ++j)
      g.values_[i * N1 + j] = f(static_cast<double>(i) / N0, static_cast<double>(j) / N1);
  return g;
}

std::vector<double> GridFunction::magnitudes() const {
  std::vector<double> m(values_.size());
  std::transform(values_.begin(), values_.end(), m.begin(), [](cplx v) { return std::abs(v); });
  return m;
}

GridFunction GridFunction::abs() const {
  GridFunction g = *this;
  for (auto& v : g.values_) v = std::abs(v);
  return g;
}

GridFunction GridFunction::conj() const {
  GridFunction g = *this;
  for (auto& v : g.values_) v = std::conj(v);
  return g;
}

double GridFunction::mean_abs() const {
  double s = 0.0;
  for (cplx v : values_) s += std::abs(v);
  return s / static_cast<double>(values_.size());
}

cplx GridFunction::mean() const {
  cplx s = std::accumulate(values_.begin(), values_.end(), cplx{});
  return s / static_cast<double>(values_.size());
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  if (!same_shape(o)) throw DimensionError("shape mismatch in addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  if (!same_shape(o)) throw DimensionError("shape mismatch in subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx c) {
  for (auto& v : values_) v *= c;
  return *this;
}

GridFunction pointwise(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw DimensionError("shape mismatch in product");
  GridFunction h = f;
  for (std::size_t i = 0; i < h.count(); ++i) h[i] *= g[i];
  return h;
}

GridFunction tensor(const GridFunction& f, const GridFunction& g) {
  if (f.dims() != 1 || g.dims() != 1) throw DimensionError("tensor expects two 1D factors");
  GridFunction h = GridFunction::zeros({f.log_sizes()[0], g.log_sizes()[0]});
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h.at(i, j) = f[i] * g[j];
  return h;
}

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw DimensionError("shape mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < f.count(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (cplx v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

long frequency_of(std::size_t i, std::size_t N) {
  return i < N / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(N);
}

std::size_t slot_of(long n, std::size_t N) {
  const long M = static_cast<long>(N);
  long r = n % M;
  if (r < 0) r += M;
  return static_cast<std::size_t>(r);
}

Spectrum::Spectrum(std::vector<int> log_sizes, cvec coefficients)
    : log_sizes_(std::move(log_sizes)), coefficients_(std::move(coefficients)) {
  check_shape(log_sizes_);
  if (coefficients_.size() != total(log_sizes_))
    throw DimensionError("coefficient count does not match axis sizes");
}

Spectrum Spectrum::zeros(std::vector<int> log_sizes) {
  check_shape(log_sizes);
  std::size_t n = total(log_sizes);
  return Spectrum(std::move(log_sizes), cvec(n));
}

long Spectrum::frequency(std::size_t i, int axis) const { return frequency_of(i, size(axis)); }

std::size_t Spectrum::slot(long n, int axis) const {
  const long half = static_cast<long>(size(axis) / 2);
  if (n < -half || n >= half) throw DomainError("frequency " + std::to_string(n) + " outside the represented band");
  return slot_of(n, size(axis));
}

}  // namespace lpk
