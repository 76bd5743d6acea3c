#include "lpk/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"

namespace lpk {

namespace {

void require_fit(const GridFunction& f, const AdaptedFamily& fam) {
  if (f.dims() != 1 || f.log_sizes()[0] != fam.log_size())
    throw DimensionError("function grid does not match the family grid");
}

std::vector<std::size_t> dims_of(const std::vector<int>& ls) {
  std::vector<std::size_t> d;
  for (int L : ls) d.push_back(std::size_t{1} << L);
  return d;
}

cvec rademacher_values(std::size_t n, std::mt19937_64& rng) {
  cvec v(n);
  for (auto& x : v) x = (rng() >> 63) ? 1.0 : -1.0;
  return v;
}

}  // namespace

GridFunction normalized_correlation(const Spectrum& fhat, const AdaptedFamily& fam, int k) {
  return fam.correlate(fhat, k) * std::sqrt(std::ldexp(1.0, k));
}

CoefficientField coefficient_field(const GridFunction& f, const AdaptedFamily& fam, long n, double alpha) {
  require_fit(f, fam);
  const Spectrum fhat = fourier_coefficients(f);
  const long N = static_cast<long>(f.size());
  CoefficientField cf;
  cf.n = n;
  cf.alpha = alpha;
  for (int k = 1; k <= fam.scales(); ++k) {
    const GridFunction corr = normalized_correlation(fhat, fam, k);
    const long len = N >> k;
    const long r = std::lround(alpha * static_cast<double>(len));
    cf.offsets.push_back(r);
    cvec row(static_cast<std::size_t>(1L << k));
    for (long j = 0; j < (1L << k); ++j) {
      long s = ((j + n) * len + r) % N;
      if (s < 0) s += N;
      row[static_cast<std::size_t>(j)] = corr[static_cast<std::size_t>(s)];
    }
    cf.c.push_back(std::move(row));
  }
  return cf;
}

GridFunction synthesize(const GridFunction& spikes, const AdaptedFamily& fam, int k) {
  require_fit(spikes, fam);
  cvec d = spikes.values();
  fft_inplace(d, {fam.size()}, false);
  const Spectrum& p = fam.prototype_spectrum(k);
  const double w = std::sqrt(std::ldexp(1.0, -k));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] *= w * p.coefficients()[i];
  return inverse_transform(Spectrum(spikes.log_sizes(), std::move(d)));
}

GridFunction tensor_correlation(const Spectrum& fhat, const AdaptedFamily& fx, int kx, const AdaptedFamily& fy,
                                int ky) {
  if (fhat.log_sizes() != std::vector<int>{fx.log_size(), fy.log_size()})
    throw DimensionError("function grid does not match the family grids");
  Spectrum s = fhat;
  const Spectrum& px = fx.prototype_spectrum(kx);
  const Spectrum& py = fy.prototype_spectrum(ky);
  const double w = std::sqrt(std::ldexp(1.0, -kx - ky));
  const std::size_t N0 = s.size(0), N1 = s.size(1);
  for (std::size_t i = 0; i < N0; ++i) {
    const cplx a = w * std::conj(px.coefficients()[i]);
    for (std::size_t j = 0; j < N1; ++j) s.coefficients()[i * N1 + j] *= a * std::conj(py.coefficients()[j]);
  }
  return inverse_transform(s);
}

GridFunction tensor_synthesize(const GridFunction& spikes, const AdaptedFamily& fx, int kx, const AdaptedFamily& fy,
                               int ky) {
  if (spikes.log_sizes() != std::vector<int>{fx.log_size(), fy.log_size()})
    throw DimensionError("spike grid does not match the family grids");
  cvec d = spikes.values();
  fft_inplace(d, dims_of(spikes.log_sizes()), false);
  const Spectrum& px = fx.prototype_spectrum(kx);
  const Spectrum& py = fy.prototype_spectrum(ky);
  const double w = std::sqrt(std::ldexp(1.0, -kx - ky));
  const std::size_t N0 = spikes.size(0), N1 = spikes.size(1);
  for (std::size_t i = 0; i < N0; ++i) {
    const cplx a = w * px.coefficients()[i];
    for (std::size_t j = 0; j < N1; ++j) d[i * N1 + j] *= a * py.coefficients()[j];
  }
  return inverse_transform(Spectrum(spikes.log_sizes(), std::move(d)));
}

TensorCorrelator::TensorCorrelator(const Spectrum& fhat, const AdaptedFamily& fx, const AdaptedFamily& fy)
    : fhat_(fhat), fx_(fx), fy_(fy) {
  if (fhat.log_sizes() != std::vector<int>{fx.log_size(), fy.log_size()})
    throw DimensionError("function grid does not match the family grids");
}

GridFunction TensorCorrelator::operator()(int kx, int ky) {
  const std::size_t N0 = fhat_.size(0), N1 = fhat_.size(1);
  const std::vector<std::size_t> dims{N0, N1};
  if (kx != kx_) {
    partial_ = fhat_.coefficients();
    const cvec& px = fx_.prototype_spectrum(kx).coefficients();
    for (std::size_t i = 0; i < N0; ++i) {
      const cplx a = std::conj(px[i]);
      for (std::size_t j = 0; j < N1; ++j) partial_[i * N1 + j] *= a;
    }
    fft_axis_inplace(partial_, dims, 0, true);
    kx_ = kx;
  }
  cvec out = partial_;
  const cvec& py = fy_.prototype_spectrum(ky).coefficients();
  const double w = std::sqrt(std::ldexp(1.0, -kx - ky));
  cvec b(N1);
  for (std::size_t j = 0; j < N1; ++j) b[j] = w * std::conj(py[j]);
  for (std::size_t i = 0; i < N0; ++i)
    for (std::size_t j = 0; j < N1; ++j) out[i * N1 + j] *= b[j];
  fft_axis_inplace(out, dims, 1, true);
  return GridFunction(fhat_.log_sizes(), std::move(out));
}

TensorSynthesizer::TensorSynthesizer(const AdaptedFamily& fx, const AdaptedFamily& fy)
    : fx_(fx), fy_(fy), dims_{fx.size(), fy.size()}, acc_(fx.size() * fy.size()) {}

void TensorSynthesizer::add(const GridFunction& spikes, int kx, int ky) {
  if (spikes.log_sizes() != std::vector<int>{fx_.log_size(), fy_.log_size()})
    throw DimensionError("spike grid does not match the family grids");
  if (kx != kx_) flush();
  kx_ = kx;
  if (pending_.empty()) pending_.assign(acc_.size(), cplx{});
  const std::size_t N0 = dims_[0], N1 = dims_[1];
  cvec d = spikes.values();
  fft_axis_inplace(d, dims_, 1, false);
  const cvec& py = fy_.prototype_spectrum(ky).coefficients();
  const double w = std::sqrt(std::ldexp(1.0, -kx - ky));
  for (std::size_t i = 0; i < N0; ++i)
    for (std::size_t j = 0; j < N1; ++j) d[i * N1 + j] *= w * py[j];
  fft_axis_inplace(d, dims_, 1, true);
  for (std::size_t i = 0; i < d.size(); ++i) pending_[i] += d[i];
}

void TensorSynthesizer::flush() {
  if (pending_.empty()) return;
  fft_axis_inplace(pending_, dims_, 0, false);
  const cvec& px = fx_.prototype_spectrum(kx_).coefficients();
  const std::size_t N0 = dims_[0], N1 = dims_[1];
  for (std::size_t i = 0; i < N0; ++i)
    for (std::size_t j = 0; j < N1; ++j) acc_[i * N1 + j] += pending_[i * N1 + j] * px[i];
  pending_.clear();
}

GridFunction TensorSynthesizer::result() {
  flush();
  cvec out = acc_;
  fft_axis_inplace(out, dims_, 0, true);
  return GridFunction({fx_.log_size(), fy_.log_size()}, std::move(out));
}

EpsilonSequence EpsilonSequence::constant(int K, cplx value) {
  std::vector<cvec> v;
  for (int k = 1; k <= K; ++k) v.emplace_back(std::size_t{1} << k, value);
  return from_values(std::move(v));
}

EpsilonSequence EpsilonSequence::rademacher(int K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EpsilonSequence e;
  for (int k = 1; k <= K; ++k) e.v_.push_back(rademacher_values(std::size_t{1} << k, rng));
  return e;
}

EpsilonSequence EpsilonSequence::from_values(std::vector<cvec> values) {
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k].size() != (std::size_t{1} << (k + 1))) throw DimensionError("ε row has the wrong length");
  double sup = 0.0;
  for (const auto& row : values)
    for (cplx x : row) sup = std::max(sup, std::abs(x));
  if (sup > 1.0)
    for (auto& row : values)
      for (auto& x : row) x /= sup;
  EpsilonSequence e;
  e.v_ = std::move(values);
  return e;
}

EpsilonSequence EpsilonSequence::conj() const {
  EpsilonSequence e = *this;
  for (auto& row : e.v_)
    for (auto& x : row) x = std::conj(x);
  return e;
}

RectEpsilon RectEpsilon::constant(int Kx, int Ky, cplx value) {
  if (std::abs(value) > 1.0) value /= std::abs(value);
  RectEpsilon e;
  e.kx_ = Kx;
  e.ky_ = Ky;
  for (int a = 1; a <= Kx; ++a)
    for (int b = 1; b <= Ky; ++b) e.v_.emplace_back(std::size_t{1} << (a + b), value);
  return e;
}

// Each (kx, ky) block has its own stream so the draw for a block does not depend on Kx, Ky.
RectEpsilon RectEpsilon::rademacher(int Kx, int Ky, std::uint64_t seed) {
  RectEpsilon e;
  e.kx_ = Kx;
  e.ky_ = Ky;
  for (int a = 1; a <= Kx; ++a)
    for (int b = 1; b <= Ky; ++b) {
      std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
      std::mt19937_64 rng(sq);
      e.v_.push_back(rademacher_values(std::size_t{1} << (a + b), rng));
    }
  return e;
}

RectEpsilon RectEpsilon::separable(const EpsilonSequence& ex, const EpsilonSequence& ey) {
  RectEpsilon e;
  e.kx_ = ex.scales();
  e.ky_ = ey.scales();
  for (int a = 1; a <= e.kx_; ++a)
    for (int b = 1; b <= e.ky_; ++b) {
      cvec row(std::size_t{1} << (a + b));
      for (long i = 0; i < (1L << a); ++i)
        for (long j = 0; j < (1L << b); ++j) row[static_cast<std::size_t>((i << b) + j)] = ex.at(a, i) * ey.at(b, j);
      e.v_.push_back(std::move(row));
    }
  return e;
}

cplx RectEpsilon::at(int kx, long jx, int ky, long jy) const {
  return v_.at(static_cast<std::size_t>((kx - 1) * ky_ + (ky - 1))).at(static_cast<std::size_t>((jx << ky) + jy));
}

}  // namespace lpk
