#include "lpk/multiplier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/plateau.hpp"

namespace lpk {

namespace {

void require(const MultiplierSymbol& m, SymbolClass c, const char* what) {
  if (m.symbol_class() != c)
    throw ContractError(std::string(what) + " needs a " + symbol_class_name(c) + " symbol, got '" + m.name() + "'");
}

void guard_band(const GridFunction& f, long band, const char* slot) {
  const double tol = kBandTolerance * std::max(1.0, max_abs(f));
  if (out_of_band(f, band) > tol)
    throw BandError(std::string(slot) + " has Fourier mass at |n| >= " + std::to_string(band));
}

std::vector<long> band_frequencies(long band) {
  std::vector<long> out;
  for (long n = -band + 1; n < band; ++n) out.push_back(n);
  return out;
}

GridFunction average_axis(const GridFunction& f, int keep) {
  const std::size_t n0 = f.size(0), n1 = f.size(1);
  GridFunction out = GridFunction::zeros({f.log_sizes()[keep]});
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j) out[keep == 0 ? i : j] += f.at(i, j);
  out *= 1.0 / static_cast<double>(keep == 0 ? n1 : n0);
  return out;
}

const Annulus& fine_annulus() {
  static const Annulus a(std::ldexp(1.0, -11), std::ldexp(1.0, -10), 0.25, 0.5);
  return a;
}

double bilinear_cutoff(int block, double x, double y) {
  static const Plateau full(-0.5, -0.25, 0.25, 0.5);
  if (block == 2) std::swap(x, y);
  return fine_annulus()(x) * full(y);
}

}  // namespace

GridFunction apply_1d(const MultiplierSymbol& m, const GridFunction& f) {
  require(m, SymbolClass::marcinkiewicz, "linear application");
  if (f.dims() != 1) throw DimensionError("linear multipliers act on 1D functions");
  return spectral_multiply(f, std::function<cplx(long)>([&](long n) { return m(static_cast<double>(n)); }));
}

GridFunction band_limit(const GridFunction& f, long band) {
  Spectrum s = fourier_coefficients(f);
  if (f.dims() == 1) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::abs(s.frequency(i)) >= band) s.coefficients()[i] = 0.0;
  } else {
    for (std::size_t i = 0; i < s.size(0); ++i)
      for (std::size_t j = 0; j < s.size(1); ++j)
        if (std::abs(s.frequency(i, 0)) >= band || std::abs(s.frequency(j, 1)) >= band)
          s.coefficients()[i * s.size(1) + j] = 0.0;
  }
  return inverse_transform(s);
}

double out_of_band(const GridFunction& f, long band) {
  const Spectrum s = fourier_coefficients(f);
  double worst = 0.0;
  if (f.dims() == 1) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::abs(s.frequency(i)) >= band) worst = std::max(worst, std::abs(s.coefficients()[i]));
  } else {
    for (std::size_t i = 0; i < s.size(0); ++i)
      for (std::size_t j = 0; j < s.size(1); ++j)
        if (std::abs(s.frequency(i, 0)) >= band || std::abs(s.frequency(j, 1)) >= band)
          worst = std::max(worst, std::abs(s.coefficients()[i * s.size(1) + j]));
  }
  return worst;
}

GridFunction apply_bilinear(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g) {
  require(m, SymbolClass::coifman_meyer, "bilinear application");
  if (f.dims() != 1 || !f.same_shape(g)) throw DimensionError("bilinear multipliers act on two 1D functions of one size");
  const long band = static_cast<long>(f.size() / 4);
  guard_band(f, band, "first input");
  guard_band(g, band, "second input");
  const Spectrum fh = fourier_coefficients(f), gh = fourier_coefficients(g);
  Spectrum out = Spectrum::zeros(f.log_sizes());
  const auto freqs = band_frequencies(band);
  for (long s : freqs) {
    const cplx a = fh.at(s);
    if (a == 0.0) continue;
    for (long t : freqs) {
      const cplx b = gh.at(t);
      if (b == 0.0) continue;
      out.at(s + t) += m(static_cast<double>(s), static_cast<double>(t)) * a * b;
    }
  }
  return inverse_transform(out);
}

GridFunction apply_biparameter(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g, long band) {
  require(m, SymbolClass::biparameter, "bi-parameter application");
  if (f.dims() != 2 || !f.same_shape(g)) throw DimensionError("bi-parameter multipliers act on two 2D functions of one shape");
  const long b0 = std::min(band, static_cast<long>(f.size(0) / 4));
  const long b1 = std::min(band, static_cast<long>(f.size(1) / 4));
  const auto side = static_cast<std::size_t>((2 * b0 - 1) * (2 * b1 - 1));
  if (side * side > kLatticeBudget) throw BudgetError("bi-parameter lattice exceeds the work budget");
  for (const auto* h : {&f, &g}) {
    const Spectrum s = fourier_coefficients(*h);
    const double tol = kBandTolerance * std::max(1.0, max_abs(*h));
    for (std::size_t i = 0; i < s.size(0); ++i)
      for (std::size_t j = 0; j < s.size(1); ++j)
        if ((std::abs(s.frequency(i, 0)) >= b0 || std::abs(s.frequency(j, 1)) >= b1) &&
            std::abs(s.coefficients()[i * s.size(1) + j]) > tol)
          throw BandError("input has Fourier mass outside the bi-parameter band");
  }
  const Spectrum fh = fourier_coefficients(f), gh = fourier_coefficients(g);
  struct Mode {
    long n0, n1;
    cplx c;
  };
  auto modes = [&](const Spectrum& s) {
    std::vector<Mode> out;
    for (long n0 = -b0 + 1; n0 < b0; ++n0)
      for (long n1 = -b1 + 1; n1 < b1; ++n1)
        if (const cplx c = s.at(n0, n1); c != 0.0) out.push_back({n0, n1, c});
    return out;
  };
  const auto fm = modes(fh), gm = modes(gh);
  Spectrum out = Spectrum::zeros(f.log_sizes());
  for (const auto& a : fm)
    for (const auto& b : gm)
      out.at(a.n0 + b.n0, a.n1 + b.n1) +=
          m(static_cast<double>(a.n0), static_cast<double>(a.n1), static_cast<double>(b.n0), static_cast<double>(b.n1)) *
          a.c * b.c;
  return inverse_transform(out);
}

MeanSplit split_mean(const MultiplierSymbol& m, const GridFunction& f) {
  require(m, SymbolClass::marcinkiewicz, "mean split");
  const MultiplierSymbol m0("zero-mean " + m.name(), m.symbol_class(),
                            [m](std::span<const double> x) -> cplx { return x[0] == 0.0 ? 0.0 : m(x); });
  return {apply_1d(m0, f), m(0.0) * f.mean()};
}

MeanSplit split_mean(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g) {
  auto at_origin = [](std::span<const double> x) { return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; }); };
  const MultiplierSymbol m0("zero-mean " + m.name(), m.symbol_class(),
                            [m, at_origin](std::span<const double> x) -> cplx { return at_origin(x) ? 0.0 : m(x); });
  const std::vector<double> origin(static_cast<std::size_t>(m.domain_dims()), 0.0);
  const cplx term = m(origin) * f.mean() * g.mean();
  if (m.symbol_class() == SymbolClass::coifman_meyer) return {apply_bilinear(m0, f, g), term};
  if (m.symbol_class() == SymbolClass::biparameter) return {apply_biparameter(m0, f, g), term};
  throw ContractError("two-slot mean split needs a two-slot symbol");
}

GridFunction PlaneSplit::assemble() const {
  GridFunction out = off_planes;
  for (std::size_t i = 0; i < out.size(0); ++i)
    for (std::size_t j = 0; j < out.size(1); ++j) out.at(i, j) += first[i] + second[j] + origin;
  return out;
}

PlaneSplit split_planes(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g, long band) {
  require(m, SymbolClass::biparameter, "plane split");
  using S = std::span<const double>;
  const MultiplierSymbol m0("off-plane " + m.name(), SymbolClass::biparameter, [m](S x) -> cplx {
    return (x[0] == 0.0 && x[2] == 0.0) || (x[1] == 0.0 && x[3] == 0.0) ? 0.0 : m(x);
  });
  const MultiplierSymbol m1("first-plane " + m.name(), SymbolClass::coifman_meyer, [m](S x) -> cplx {
    return x[0] == 0.0 && x[1] == 0.0 ? 0.0 : m(x[0], 0.0, x[1], 0.0);
  });
  const MultiplierSymbol m2("second-plane " + m.name(), SymbolClass::coifman_meyer, [m](S x) -> cplx {
    return x[0] == 0.0 && x[1] == 0.0 ? 0.0 : m(0.0, x[0], 0.0, x[1]);
  });
  PlaneSplit p;
  p.off_planes = apply_biparameter(m0, f, g, band);
  p.first = apply_bilinear(m1, average_axis(f, 0), average_axis(g, 0));
  p.second = apply_bilinear(m2, average_axis(f, 1), average_axis(g, 1));
  p.origin = m(0.0, 0.0, 0.0, 0.0) * f.mean() * g.mean();
  return p;
}

double coefficient_cutoff(int dims, int block_a, int block_b, std::span<const double> u) {
  static const Annulus single(1.0 / 32, 1.0 / 16, 0.25, 0.5);
  switch (dims) {
    case 1: return single(u[0]);
    case 2: return bilinear_cutoff(block_a, u[0], u[1]);
    case 4: return bilinear_cutoff(block_a, u[0], u[2]) * bilinear_cutoff(block_b, u[1], u[3]);
  }
  throw DimensionError("coefficient tables live in 1, 2 or 4 dimensions");
}

namespace {

SymbolCoefficients build_coefficients(const MultiplierSymbol& m, int dims, int block_a, int block_b,
                                      std::vector<int> scales, std::size_t min_points) {
  for (int k : scales)
    if (k < 1 || k > kMaxLog) throw LevelError("coefficient scale must lie in [1, 13]");
  if (dims > 1)
    for (int b : {block_a, dims == 4 ? block_b : 1})
      if (b < 1 || b > 3) throw DomainError("block label must lie in [1, 3]");
  SymbolCoefficients out;
  out.dims = dims;
  out.scales = scales;
  out.block_a = block_a;
  out.block_b = block_b;
  out.decay_exponent = dims == 1 ? 4.0 : 5.0;
  std::size_t total = 1;
  for (int k : scales) {
    out.points.push_back(std::max(std::size_t{8} << k, min_points));
    total *= out.points.back();
  }
  if (total > kLatticeBudget) throw BudgetError("coefficient quadrature exceeds the work budget");

  cvec g(total);
  std::vector<double> u(static_cast<std::size_t>(dims)), x(static_cast<std::size_t>(dims));
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    for (int a = dims - 1; a >= 0; --a) {
      const std::size_t Q = out.points[a];
      u[a] = -0.5 + static_cast<double>(r % Q) / static_cast<double>(Q);
      x[a] = std::ldexp(u[a], scales[a]);
      r /= Q;
    }
    const double w = coefficient_cutoff(dims, block_a, block_b, u);
    g[c] = w == 0.0 ? cplx{} : w * m(x);
  }
  fft_inplace(g, out.points, true);
  // c_n = mean_j g(u_j) e(n u_j), with u_j = -1/2 + j/Q contributing (-1)^n per axis.
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    long parity = 0;
    for (int a = dims - 1; a >= 0; --a) {
      parity += frequency_of(r % out.points[a], out.points[a]);
      r /= out.points[a];
    }
    g[c] *= (parity % 2 ? -scale : scale);
  }
  out.c = std::move(g);
  return out;
}

}  // namespace

cplx SymbolCoefficients::at(std::span<const long> n) const {
  std::size_t idx = 0;
  for (int a = 0; a < dims; ++a) {
    const long h = static_cast<long>(points[a] / 2);
    if (n[a] < -h || n[a] >= h) return 0.0;
    idx = idx * points[a] + slot_of(n[a], points[a]);
  }
  return c[idx];
}

cplx SymbolCoefficients::reassemble(std::span<const double> x) const {
  cplx s{};
  for (std::size_t c_i = 0; c_i < c.size(); ++c_i) {
    std::size_t r = c_i;
    double phase = 0.0;
    for (int a = dims - 1; a >= 0; --a) {
      phase += static_cast<double>(frequency_of(r % points[a], points[a])) * std::ldexp(x[a], -scales[a]);
      r /= points[a];
    }
    s += c[c_i] * std::polar(1.0, -2.0 * std::numbers::pi * phase);
  }
  return s;
}

double SymbolCoefficients::decay_constant(double p) const {
  double worst = 0.0;
  for (std::size_t c_i = 0; c_i < c.size(); ++c_i) {
    std::size_t r = c_i;
    double w = 1.0;
    for (int a = dims - 1; a >= 0; --a) {
      w *= std::pow(std::abs(static_cast<double>(frequency_of(r % points[a], points[a]))) + 1.0, p);
      r /= points[a];
    }
    worst = std::max(worst, w * std::abs(c[c_i]));
  }
  return worst;
}

SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int k) {
  require(m, SymbolClass::marcinkiewicz, "one-slot coefficients");
  return build_coefficients(m, 1, 0, 0, {k}, 1024);
}

SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int block, int k) {
  require(m, SymbolClass::coifman_meyer, "bilinear coefficients");
  return build_coefficients(m, 2, block, 0, {k, k}, 256);
}

SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int block_a, int block_b, int k, int k2) {
  require(m, SymbolClass::biparameter, "bi-parameter coefficients");
  return build_coefficients(m, 4, block_a, block_b, {k, k2, k, k2}, 16);
}

double reassembly_residual(const MultiplierSymbol& m, const SymbolCoefficients& sc) {
  // Summing the truncated series at every node is one forward transform of the table.
  cvec v = sc.c;
  std::size_t total = v.size();
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    long parity = 0;
    for (int a = sc.dims - 1; a >= 0; --a) {
      parity += frequency_of(r % sc.points[a], sc.points[a]);
      r /= sc.points[a];
    }
    if (parity % 2) v[c] = -v[c];
  }
  fft_inplace(v, sc.points, false);
  std::vector<double> u(static_cast<std::size_t>(sc.dims)), x(static_cast<std::size_t>(sc.dims));
  double worst = 0.0;
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t r = c;
    bool lattice = true;
    for (int a = sc.dims - 1; a >= 0; --a) {
      const std::size_t Q = sc.points[a];
      const std::size_t j = r % Q;
      r /= Q;
      const std::size_t per = Q >> sc.scales[a];  // nodes per unit of x
      lattice = lattice && (j % per == 0);
      u[a] = -0.5 + static_cast<double>(j) / static_cast<double>(Q);
      x[a] = std::ldexp(u[a], sc.scales[a]);
    }
    if (!lattice || coefficient_cutoff(sc.dims, sc.block_a, sc.block_b, u) != 1.0) continue;
    worst = std::max(worst, std::abs(v[c] - m(x)));
  }
  return worst;
}

PairingCheck trilinear_pairing_check(const GridFunction& f, const GridFunction& g, const GridFunction& h) {
  if (f.dims() != 1 || !f.same_shape(g) || !f.same_shape(h)) throw DimensionError("pairing needs three 1D functions of one size");
  const long band = static_cast<long>(f.size() / 4);
  guard_band(f, band, "first input");
  guard_band(g, band, "second input");
  const Spectrum fh = fourier_coefficients(f), gh = fourier_coefficients(g), hh = fourier_coefficients(h);
  PairingCheck out;
  for (long s = -band + 1; s < band; ++s) {
    const cplx a = fh.at(s);
    if (a == 0.0) continue;
    for (long t = -band + 1; t < band; ++t) out.lattice_sum += a * gh.at(t) * hh.at(-s - t);
  }
  out.integral = pointwise(pointwise(f, g), h).mean();
  out.gap = std::abs(out.lattice_sum - out.integral);
  return out;
}

}  // namespace lpk
