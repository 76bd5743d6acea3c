#pragma once

#include <cstdint>
#include <vector>

#include "lpk/adapted.hpp"
#include "lpk/dyadic.hpp"
#include "lpk/grid.hpp"

namespace lpk {

// ⟨f, ϕ_{I^n_α}⟩ for every dyadic I at levels 1..K, with ϕ = |I|^{-1/2} φ.
struct CoefficientField {
  long n = 0;
  double alpha = 0.0;
  std::vector<long> offsets;  // per scale: α |I| in samples after snapping
  std::vector<cvec> c;        // c[k-1][j]

  int scales() const { return static_cast<int>(c.size()); }
  cplx at(const DyadicInterval& I) const { return c.at(I.level - 1).at(static_cast<std::size_t>(I.index)); }
};

// alpha is snapped to the nearest multiple of 2^k / N at each scale.
CoefficientField coefficient_field(const GridFunction& f, const AdaptedFamily& fam, long n, double alpha);

// ⟨f, ϕ_{k, s}⟩ for every sample shift s, where ϕ_{k,s} is the normalized scale-k member
// whose reference interval starts at s / N.
GridFunction normalized_correlation(const Spectrum& fhat, const AdaptedFamily& fam, int k);

// Σ_s D(s) ϕ_{k, s}: one normalized member per spike.
GridFunction synthesize(const GridFunction& spikes, const AdaptedFamily& fam, int k);

// 2D analogues for the tensor members ϕ_I ⊗ ϕ_J.
GridFunction tensor_correlation(const Spectrum& fhat, const AdaptedFamily& fx, int kx, const AdaptedFamily& fy, int ky);
GridFunction tensor_synthesize(const GridFunction& spikes, const AdaptedFamily& fx, int kx, const AdaptedFamily& fy,
                               int ky);

// tensor_correlation over many (kx, ky), reusing the first-axis transform while kx is unchanged.
class TensorCorrelator {
 public:
  TensorCorrelator(const Spectrum& fhat, const AdaptedFamily& fx, const AdaptedFamily& fy);
  GridFunction operator()(int kx, int ky);

 private:
  const Spectrum& fhat_;
  const AdaptedFamily& fx_;
  const AdaptedFamily& fy_;
  int kx_ = 0;
  cvec partial_;
};

// Accumulates Σ tensor_synthesize(spikes, fx, kx, fy, ky); cheapest when blocks arrive grouped by kx.
class TensorSynthesizer {
 public:
  TensorSynthesizer(const AdaptedFamily& fx, const AdaptedFamily& fy);
  void add(const GridFunction& spikes, int kx, int ky);
  GridFunction result();

 private:
  void flush();
  const AdaptedFamily& fx_;
  const AdaptedFamily& fy_;
  std::vector<std::size_t> dims_;
  int kx_ = 0;
  cvec pending_;  // Σ over the current kx, transformed along y and back
  cvec acc_;      // x-frequency accumulator
};

// Complex weights ε_I, normalized so that sup |ε| <= 1.
class EpsilonSequence {
 public:
  EpsilonSequence() = default;
  static EpsilonSequence constant(int K, cplx value = 1.0);
  static EpsilonSequence rademacher(int K, std::uint64_t seed);
  // Divides by sup |ε| when that exceeds 1.
  static EpsilonSequence from_values(std::vector<cvec> values);

  int scales() const { return static_cast<int>(v_.size()); }
  cplx at(int k, long j) const { return v_.at(k - 1).at(static_cast<std::size_t>(j)); }
  EpsilonSequence conj() const;
  const std::vector<cvec>& values() const { return v_; }

 private:
  std::vector<cvec> v_;
};

// ε_R for dyadic rectangles R = I x J at levels (kx, ky).
class RectEpsilon {
 public:
  RectEpsilon() = default;
  static RectEpsilon constant(int Kx, int Ky, cplx value = 1.0);
  static RectEpsilon rademacher(int Kx, int Ky, std::uint64_t seed);
  static RectEpsilon separable(const EpsilonSequence& ex, const EpsilonSequence& ey);

  int scales_x() const { return kx_; }
  int scales_y() const { return ky_; }
  cplx at(int kx, long jx, int ky, long jy) const;

 private:
  int kx_ = 0, ky_ = 0;
  std::vector<cvec> v_;  // [(kx-1) * Ky + (ky-1)] row-major 2^kx x 2^ky
};

}  // namespace lpk
