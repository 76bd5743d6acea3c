#include "lpk/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include "lpk/coefficients.hpp"
#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/maximal.hpp"
#include "lpk/square.hpp"

namespace lpk {

namespace {

long wrap(long s, long N) { return ((s % N) + N) % N; }

// |c_R| / |R|^{1/2} for every rectangle at levels (kx, ky), indexed by grid point.
std::vector<double> rectangle_sizes(const GridFunction& C, int kx, int ky, int Lx, int Ly, const HybridShift& sh) {
  const long Nx = 1L << Lx, Ny = 1L << Ly;
  const long lx = Nx >> kx, ly = Ny >> ky;
  const std::vector<long> rx = sh.sup ? alpha_shifts(lx, kMaxShiftsPerAxis2D) : std::vector<long>{0};
  const std::vector<long> ry = sh.sup ? alpha_shifts(ly, kMaxShiftsPerAxis2D) : std::vector<long>{0};
  const double w = std::sqrt(std::ldexp(1.0, kx + ky));
  std::vector<double> out(static_cast<std::size_t>(Nx * Ny));
  for (long jx = 0; jx < (1L << kx); ++jx)
    for (long jy = 0; jy < (1L << ky); ++jy) {
      double best = 0.0;
      for (long a : rx)
        for (long b : ry) {
          const long s = wrap((jx + sh.nx) * lx + a, Nx), t = wrap((jy + sh.ny) * ly + b, Ny);
          best = std::max(best, std::abs(C[static_cast<std::size_t>(s * Ny + t)]));
        }
      best *= w;
      for (long x = jx * lx; x < (jx + 1) * lx; ++x)
        for (long y = jy * ly; y < (jy + 1) * ly; ++y) out[static_cast<std::size_t>(x * Ny + y)] = best;
    }
  return out;
}

void check_cube(const std::array<int, 3>& ls) {
  std::size_t total = 1;
  for (int L : ls) {
    if (L < kMinLog || L > 8) throw DimensionError("cube axis exponent outside [4, 8]");
    total <<= L;
  }
  if (total > kMaxCubeSamples) throw BudgetError("cube exceeds the sample budget");
}

}  // namespace

HybridKind parse_hybrid(const std::string& text) {
  if (text == "MM") return HybridKind::MM;
  if (text == "MS") return HybridKind::MS;
  if (text == "SM") return HybridKind::SM;
  if (text == "SS") return HybridKind::SS;
  throw ParseError("unknown hybrid kind '" + text + "'");
}

const char* hybrid_name(HybridKind k) {
  switch (k) {
    case HybridKind::MM: return "MM";
    case HybridKind::MS: return "MS";
    case HybridKind::SM: return "SM";
    case HybridKind::SS: return "SS";
  }
  return "?";
}

GridFunction hybrid(const GridFunction& f, const FamilyPair& fams, HybridKind kind, HybridShift shift) {
  if (f.dims() != 2) throw DimensionError("hybrid operators act on 2D functions");
  const bool s_x = kind == HybridKind::SM || kind == HybridKind::SS;
  const bool s_y = kind == HybridKind::MS || kind == HybridKind::SS;
  if ((s_x && !fams.x.zero_mean()) || (s_y && !fams.y.zero_mean()))
    throw ContractError(std::string(hybrid_name(kind)) + " needs zero-mean families on its S axes");
  const int Lx = f.log_sizes()[0], Ly = f.log_sizes()[1];
  const Spectrum fhat = fourier_coefficients(f);
  const std::size_t count = f.count();
  std::vector<double> outer(count, 0.0), inner(count);
  TensorCorrelator corr(fhat, fams.x, fams.y);
  for (int kx = 1; kx <= fams.x.scales(); ++kx) {
    std::fill(inner.begin(), inner.end(), 0.0);
    for (int ky = 1; ky <= fams.y.scales(); ++ky) {
      const auto A = rectangle_sizes(corr(kx, ky), kx, ky, Lx, Ly, shift);
      for (std::size_t i = 0; i < count; ++i) inner[i] = s_y ? inner[i] + A[i] * A[i] : std::max(inner[i], A[i]);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const double v = s_y ? std::sqrt(inner[i]) : inner[i];
      outer[i] = s_x ? outer[i] + v * v : std::max(outer[i], v);
    }
  }
  cvec out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = s_x ? std::sqrt(outer[i]) : outer[i];
  return GridFunction(f.log_sizes(), std::move(out));
}

SampleCube SampleCube::zeros(std::array<int, 3> log_sizes) {
  check_cube(log_sizes);
  SampleCube c;
  c.log_sizes = log_sizes;
  c.values.assign(std::size_t{1} << (log_sizes[0] + log_sizes[1] + log_sizes[2]), 0.0);
  return c;
}

SampleCube SampleCube::sample(std::array<int, 3> log_sizes, const std::function<cplx(double, double, double)>& f) {
  SampleCube c = zeros(log_sizes);
  for (std::size_t i = 0; i < c.size(0); ++i)
    for (std::size_t j = 0; j < c.size(1); ++j)
      for (std::size_t k = 0; k < c.size(2); ++k)
        c.at(i, j, k) = f(static_cast<double>(i) / c.size(0), static_cast<double>(j) / c.size(1),
                          static_cast<double>(k) / c.size(2));
  return c;
}

SampleCube SampleCube::tensor(const GridFunction& a, const GridFunction& b, const GridFunction& c) {
  if (a.dims() != 1 || b.dims() != 1 || c.dims() != 1) throw DimensionError("cube tensor expects 1D factors");
  SampleCube q = zeros({a.log_sizes()[0], b.log_sizes()[0], c.log_sizes()[0]});
  for (std::size_t i = 0; i < q.size(0); ++i)
    for (std::size_t j = 0; j < q.size(1); ++j)
      for (std::size_t k = 0; k < q.size(2); ++k) q.at(i, j, k) = a[i] * b[j] * c[k];
  return q;
}

SampleCube hybrid3(const SampleCube& f, const std::array<AdaptedFamily, 3>& fams, const std::string& kind) {
  check_cube(f.log_sizes);
  if (kind.size() != 3 || kind.find_first_not_of("SM") != std::string::npos)
    throw ParseError("tri-parameter kind must be three letters from {S, M}, got '" + kind + "'");
  std::array<bool, 3> is_s{};
  for (int a = 0; a < 3; ++a) {
    is_s[a] = kind[a] == 'S';
    if (fams[a].log_size() != f.log_sizes[a]) throw DimensionError("family grid does not match the cube axis");
    if (is_s[a] && !fams[a].zero_mean()) throw ContractError("S axes need zero-mean families");
  }
  const std::vector<std::size_t> dims = {f.size(0), f.size(1), f.size(2)};
  cvec fhat = f.values;
  fft_inplace(fhat, dims, false);
  for (auto& v : fhat) v /= static_cast<double>(fhat.size());

  const std::size_t count = f.values.size();
  std::vector<double> acc(count, 0.0), inner(count);
  std::array<int, 3> K{fams[0].scales(), fams[1].scales(), fams[2].scales()};

  auto amplitude = [&](const std::array<int, 3>& k) {
    cvec s = fhat;
    const double w = std::sqrt(std::ldexp(1.0, -(k[0] + k[1] + k[2])));
    const auto& p0 = fams[0].prototype_spectrum(k[0]).coefficients();
    const auto& p1 = fams[1].prototype_spectrum(k[1]).coefficients();
    const auto& p2 = fams[2].prototype_spectrum(k[2]).coefficients();
    for (std::size_t i = 0; i < dims[0]; ++i)
      for (std::size_t j = 0; j < dims[1]; ++j) {
        const cplx a = w * std::conj(p0[i]) * std::conj(p1[j]);
        for (std::size_t l = 0; l < dims[2]; ++l) s[(i * dims[1] + j) * dims[2] + l] *= a * std::conj(p2[l]);
      }
    fft_inplace(s, dims, true);
    const double amp = std::sqrt(std::ldexp(1.0, k[0] + k[1] + k[2]));
    std::vector<double> out(count);
    for (std::size_t i = 0; i < dims[0]; ++i) {
      const std::size_t si = (i >> (f.log_sizes[0] - k[0])) << (f.log_sizes[0] - k[0]);
      for (std::size_t j = 0; j < dims[1]; ++j) {
        const std::size_t sj = (j >> (f.log_sizes[1] - k[1])) << (f.log_sizes[1] - k[1]);
        for (std::size_t l = 0; l < dims[2]; ++l) {
          const std::size_t sl = (l >> (f.log_sizes[2] - k[2])) << (f.log_sizes[2] - k[2]);
          out[(i * dims[1] + j) * dims[2] + l] = amp * std::abs(s[(si * dims[1] + sj) * dims[2] + sl]);
        }
      }
    }
    return out;
  };

  // Odometer over the scales of one group of axes.
  auto each = [&](bool want_s, auto&& body, std::array<int, 3> k) {
    std::vector<int> axes;
    for (int a = 0; a < 3; ++a)
      if (is_s[a] == want_s) axes.push_back(a);
    for (int a : axes) k[a] = 1;
    while (true) {
      body(k);
      std::size_t p = 0;
      while (p < axes.size() && ++k[axes[p]] > K[axes[p]]) k[axes[p++]] = 1;
      if (p == axes.size()) break;
    }
  };

  each(true, [&](std::array<int, 3> ks) {
    std::fill(inner.begin(), inner.end(), 0.0);
    each(false, [&](std::array<int, 3> km) {
      const auto A = amplitude(km);
      for (std::size_t i = 0; i < count; ++i) inner[i] = std::max(inner[i], A[i]);
    }, ks);
    for (std::size_t i = 0; i < count; ++i) acc[i] += inner[i] * inner[i];
  }, std::array<int, 3>{1, 1, 1});

  SampleCube out = SampleCube::zeros(f.log_sizes);
  for (std::size_t i = 0; i < count; ++i) out.values[i] = std::sqrt(acc[i]);
  return out;
}

SampleCube cube_directional_maximal(const SampleCube& f, int axis) {
  if (axis < 0 || axis > 2) throw DimensionError("cube axis must be 0, 1 or 2");
  SampleCube out = SampleCube::zeros(f.log_sizes);
  const std::size_t n = f.size(axis);
  std::array<std::size_t, 3> stride{f.size(1) * f.size(2), f.size(2), 1};
  std::vector<double> line(n);
  for (std::size_t base = 0; base < f.values.size(); ++base) {
    // Visit each line once, from its first point along the axis.
    if ((base / stride[axis]) % n != 0) continue;
    for (std::size_t t = 0; t < n; ++t) line[t] = std::abs(f.values[base + t * stride[axis]]);
    const auto m = hl_line(line);
    for (std::size_t t = 0; t < n; ++t) out.values[base + t * stride[axis]] = m[t];
  }
  return out;
}

}  // namespace lpk
