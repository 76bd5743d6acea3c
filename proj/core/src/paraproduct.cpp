#include "lpk/paraproduct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/hybrid.hpp"
#include "lpk/square.hpp"

namespace lpk {

namespace {

long wrap(long s, long N) { return ((s % N) + N) % N; }

void check_axis(const std::vector<AdaptedFamily>& fams, int slot, int L, const char* axis) {
  if (fams.size() != 3) throw ContractError(std::string("paraproducts need three families on the ") + axis + " axis");
  if (slot < 1 || slot > 3) throw ContractError("slot label must lie in {1, 2, 3}");
  for (int i = 0; i < 3; ++i) {
    if (fams[i].log_size() != L) throw DimensionError("family grid does not match the input");
    if (i + 1 != slot && !fams[i].zero_mean())
      throw ContractError("slot " + std::to_string(i + 1) + " on the " + axis + " axis needs a zero-mean family");
  }
}

int scales_of(const std::vector<AdaptedFamily>& fams) {
  return std::min({fams[0].scales(), fams[1].scales(), fams[2].scales()});
}

std::vector<long> shifts_for(const std::optional<ParaproductShift>& sh, long len, long cap) {
  return sh && sh->average ? alpha_shifts(len, cap) : std::vector<long>{0};
}

}  // namespace

void check_spec(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw DimensionError("paraproduct inputs differ in shape");
  if (spec.params == 1) {
    if (f.dims() != 1) throw DimensionError("single-parameter paraproducts act on 1D functions");
    check_axis(spec.x, spec.slot_a, f.log_sizes()[0], "first");
  } else if (spec.params == 2) {
    if (f.dims() != 2) throw DimensionError("bi-parameter paraproducts act on 2D functions");
    check_axis(spec.x, spec.slot_a, f.log_sizes()[0], "first");
    check_axis(spec.y, spec.slot_b, f.log_sizes()[1], "second");
  } else {
    throw ContractError("parameter count must be 1 or 2");
  }
}

namespace {

// Third-slot spike arrays, scale by scale (1D) with weights ε |I|^{-1/2} c¹ c².
std::vector<GridFunction> spikes_1p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g) {
  const int K = std::min(scales_of(spec.x), spec.eps.scales());
  const Spectrum fh = fourier_coefficients(f), gh = fourier_coefficients(g);
  const long N = static_cast<long>(f.size());
  const long n1 = spec.shift ? spec.shift->n[0] : 0, n2 = spec.shift ? spec.shift->n[1] : 0;
  std::vector<GridFunction> out;
  for (int k = 1; k <= K; ++k) {
    const GridFunction c1 = normalized_correlation(fh, spec.x[0], k);
    const GridFunction c2 = normalized_correlation(gh, spec.x[1], k);
    const long len = N >> k;
    const auto rs = shifts_for(spec.shift, len, kMaxShiftsPerScale);
    const double w = std::sqrt(std::ldexp(1.0, k)) / static_cast<double>(rs.size());
    GridFunction spikes = GridFunction::zeros(f.log_sizes());
    for (long j = 0; j < (1L << k); ++j)
      for (long r : rs) {
        const long at = j * len + r;
        spikes[static_cast<std::size_t>(at)] = w * spec.eps.at(k, j) * c1[static_cast<std::size_t>(wrap(at + n1 * len, N))] *
                                               c2[static_cast<std::size_t>(wrap(at + n2 * len, N))];
      }
    out.push_back(std::move(spikes));
  }
  return out;
}

using BlockSink = std::function<void(int kx, int ky, const GridFunction& spikes)>;

// Streams the spike grid of each (kx, ky) block in kx-major order.
void spikes_2p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g, const BlockSink& sink) {
  const int Kx = std::min(scales_of(spec.x), spec.rect_eps.scales_x());
  const int Ky = std::min(scales_of(spec.y), spec.rect_eps.scales_y());
  const Spectrum fh = fourier_coefficients(f), gh = fourier_coefficients(g);
  const long Nx = static_cast<long>(f.size(0)), Ny = static_cast<long>(f.size(1));
  const std::array<long, 4> n = spec.shift ? spec.shift->n : std::array<long, 4>{};
  TensorCorrelator corr1(fh, spec.x[0], spec.y[0]), corr2(gh, spec.x[1], spec.y[1]);
  for (int kx = 1; kx <= Kx; ++kx)
    for (int ky = 1; ky <= Ky; ++ky) {
      const GridFunction c1 = corr1(kx, ky);
      const GridFunction c2 = corr2(kx, ky);
      const long lx = Nx >> kx, ly = Ny >> ky;
      const auto rx = shifts_for(spec.shift, lx, kMaxShiftsPerAxis2D);
      const auto ry = shifts_for(spec.shift, ly, kMaxShiftsPerAxis2D);
      const double w = std::sqrt(std::ldexp(1.0, kx + ky)) / static_cast<double>(rx.size() * ry.size());
      GridFunction spikes = GridFunction::zeros(f.log_sizes());
      auto at = [&](const GridFunction& c, long s, long t) {
        return c[static_cast<std::size_t>(wrap(s, Nx) * Ny + wrap(t, Ny))];
      };
      for (long jx = 0; jx < (1L << kx); ++jx)
        for (long jy = 0; jy < (1L << ky); ++jy) {
          const cplx e = spec.rect_eps.at(kx, jx, ky, jy);
          for (long a : rx)
            for (long b : ry) {
              const long s = jx * lx + a, t = jy * ly + b;
              spikes.at(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) =
                  w * e * at(c1, s + n[0] * lx, t + n[1] * ly) * at(c2, s + n[2] * lx, t + n[3] * ly);
            }
        }
      sink(kx, ky, spikes);
    }
}

}  // namespace

GridFunction paraproduct_1p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g) {
  if (spec.params != 1) throw ContractError("spec is not single-parameter");
  check_spec(spec, f, g);
  GridFunction out = GridFunction::zeros(f.log_sizes());
  const auto sp = spikes_1p(spec, f, g);
  for (std::size_t i = 0; i < sp.size(); ++i) out += synthesize(sp[i], spec.x[2], static_cast<int>(i) + 1);
  return out;
}

GridFunction paraproduct_2p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g) {
  if (spec.params != 2) throw ContractError("spec is not bi-parameter");
  check_spec(spec, f, g);
  TensorSynthesizer synth(spec.x[2], spec.y[2]);
  spikes_2p(spec, f, g, [&](int kx, int ky, const GridFunction& sp) { synth.add(sp, kx, ky); });
  return synth.result();
}

GridFunction paraproduct(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g) {
  return spec.params == 2 ? paraproduct_2p(spec, f, g) : paraproduct_1p(spec, f, g);
}

cplx paraproduct_pairing(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g,
                         const GridFunction& h) {
  check_spec(spec, f, g);
  if (!f.same_shape(h)) throw DimensionError("pairing function differs in shape");
  const Spectrum hh = fourier_coefficients(h);
  cplx s{};
  auto accumulate = [&](const GridFunction& spikes, const GridFunction& c3) {
    for (std::size_t i = 0; i < spikes.count(); ++i)
      if (spikes[i] != 0.0) s += spikes[i] * std::conj(c3[i]);
  };
  if (spec.params == 1) {
    const auto sp = spikes_1p(spec, f, g);
    for (std::size_t i = 0; i < sp.size(); ++i)
      accumulate(sp[i], normalized_correlation(hh, spec.x[2], static_cast<int>(i) + 1));
  } else {
    TensorCorrelator corr(hh, spec.x[2], spec.y[2]);
    spikes_2p(spec, f, g, [&](int kx, int ky, const GridFunction& sp) { accumulate(sp, corr(kx, ky)); });
  }
  return s;
}

}  // namespace lpk
