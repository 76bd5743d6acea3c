#pragma once

#include <vector>

#include "lpk/grid.hpp"
#include "lpk/symbol.hpp"

namespace lpk {

// Λ_m f = Σ_n m(n) f̂(n) e(nx), with m(0) applied as given.
GridFunction apply_1d(const MultiplierSymbol& m, const GridFunction& f);

// Zero every coefficient with |n| >= band on some axis.
GridFunction band_limit(const GridFunction& f, long band);
// Largest coefficient magnitude with |n| >= band on some axis.
double out_of_band(const GridFunction& f, long band);

inline constexpr double kBandTolerance = 1e-12;
inline constexpr long kBiparameterBand = 32;
inline constexpr std::size_t kLatticeBudget = std::size_t{1} << 24;

// Λ_m(f, g) = Σ_{s,t} m(s, t) f̂(s) ĝ(t) e((s + t) x) by direct summation over |s|, |t| < N/4,
// so every output frequency is represented without wrap-around. Inputs with mass at
// |n| >= N/4 raise BandError.
GridFunction apply_bilinear(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g);

// Two-parameter version on T^2, band min(band, N_a / 4) per axis; BudgetError past (2B)^4 > 2^24.
GridFunction apply_biparameter(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g,
                               long band = kBiparameterBand);

// Λ_m f = Λ_{m0} f + m(0) f̂(0), with m0 = m off the origin and m0(0) = 0.
struct MeanSplit {
  GridFunction zero_part;
  cplx mean_term;
};
MeanSplit split_mean(const MultiplierSymbol& m, const GridFunction& f);
MeanSplit split_mean(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g);

// Λ_m(f, g) = Λ_{m0}(f, g) + Λ_{m1}(F1, G1)(x) + Λ_{m2}(F2, G2)(y) + m(0) f̂(0) ĝ(0), where m0 vanishes
// on both coordinate planes, m1 = m(s1, 0, t1, 0) and m2 = m(0, s2, 0, t2) off the origin, and
// F1, G1 (F2, G2) average out the second (first) variable.
struct PlaneSplit {
  GridFunction off_planes;  // 2D
  GridFunction first;       // 1D in x
  GridFunction second;      // 1D in y
  cplx origin;
  GridFunction assemble() const;
};
PlaneSplit split_planes(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g,
                        long band = kBiparameterBand);

// Fourier coefficients of the localized symbol m_k = m · φ(2^{-k} ·) on the box of side 2^k per
// axis: m_k(t) = Σ_n c_n e(-n 2^{-k} t). Block labels the cutoff (0 for one slot; 1..3 for two slots;
// a, b for two parameters).
struct SymbolCoefficients {
  int dims = 1;                     // 1, 2 or 4
  std::vector<int> scales;          // k per axis
  std::vector<std::size_t> points;  // quadrature points per axis (coefficient table extent)
  int block_a = 0;
  int block_b = 0;
  cvec c;                           // transform order per axis, last axis fastest
  double decay_exponent = 4.0;      // 4 in one dimension, 5 per axis otherwise

  cplx at(std::span<const long> n) const;
  // m_k from the coefficients at a real point (one coordinate per axis).
  cplx reassemble(std::span<const double> x) const;
  // max over n of Π (|n_j| + 1)^{p} |c_n|.
  double decay_constant(double p) const;
};

// Cutoff of the localized symbol, at the rescaled point u = 2^{-k} x.
double coefficient_cutoff(int dims, int block_a, int block_b, std::span<const double> u);

SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int k);
SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int block, int k);
SymbolCoefficients symbol_coefficients(const MultiplierSymbol& m, int block_a, int block_b, int k, int k2);

// Max |m_k - m| over lattice points where the cutoff is 1 (the matched annulus).
double reassembly_residual(const MultiplierSymbol& m, const SymbolCoefficients& c);

struct PairingCheck {
  cplx lattice_sum;
  cplx integral;
  double gap = 0.0;
};
// Σ_{s,t} f̂(s) ĝ(t) ĥ(-s-t) against the grid mean of f g h; f and g band-limited to N/4.
PairingCheck trilinear_pairing_check(const GridFunction& f, const GridFunction& g, const GridFunction& h);

}  // namespace lpk
