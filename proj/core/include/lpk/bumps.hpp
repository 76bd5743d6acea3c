#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lpk/grid.hpp"

namespace lpk {

// Per-scale prototypes for k = 1..K on a 1D grid of 2^L points.
struct ScaleSet {
  int L = 0;
  int K = 0;
  std::vector<Spectrum> spectra;
  std::vector<GridFunction> spatial;

  const Spectrum& hat(int k) const { return spectra.at(k - 1); }
  const GridFunction& at(int k) const { return spatial.at(k - 1); }
};

// Sample t -> symbol(k, t) at the integers of the grid band and transform back.
ScaleSet scale_set_from_symbol(int K, int L, const std::function<double(int, double)>& symbol);

// α-hat(2^-k t) - α-hat(2^{-k+1} t) with α-hat = 1 on [-1/8, 1/8], 0 off [-1/4, 1/4].
double pou_first_symbol(int k, double t);
// 1 on 2^{k-4} <= |t| <= 2^{k-2}, vanishing near 0.
double pou_second_symbol(int k, double t);

struct PartitionOfUnity {
  ScaleSet first;
  ScaleSet second;
};

// Largest K the grid resolves.
int max_scales(int L);

PartitionOfUnity build_pou(int K, int L);

struct PouCheck {
  long band = 0;              // identity checked on 0 < |n| <= band
  double residual = 0.0;      // max |Σ_k ψ̂¹_k(n) ψ̂²_k(-n) - 1|
  double origin = 0.0;        // |Σ_k ψ̂¹_k(0) ψ̂²_k(0)|
  double leakage = 0.0;       // max |ψ̂¹_k(n)| outside 2^{k-4} < |n| < 2^{k-2}
  double second_mean = 0.0;   // max |ψ̂²_k(0)|
};
PouCheck check_pou(const PartitionOfUnity& p);

// Nine prototype families ψ^{a,i}_k, a, i in {1, 2, 3}.
struct DoubleBumpSystem {
  int L = 0;
  int K = 0;
  std::array<std::array<ScaleSet, 3>, 3> sets;
  const ScaleSet& at(int a, int i) const { return sets.at(a - 1).at(i - 1); }
};

double double_symbol(int a, int i, int k, double t);
DoubleBumpSystem build_double_pou(int K, int L);

struct DoubleCheck {
  long band = 0;             // identity checked on max(|n1|, |n2|) <= band
  double residual = 0.0;
  double origin = 0.0;
  double leakage = 0.0;      // max coefficient outside the declared supports
  double absorption = 0.0;   // max |ψ̂^{a,3}_k(-n1-n2) - 1| where the first two factors are nonzero
};
DoubleCheck check_double_pou(const DoubleBumpSystem& s);

}  // namespace lpk
