#pragma once

#include <string>
#include <vector>

#include "lpk/bumps.hpp"
#include "lpk/dyadic.hpp"
#include "lpk/grid.hpp"

namespace lpk {

enum class FamilyKind { from_pou_1, from_pou_2, lower_bounded, low_pass, custom };
const char* family_name(FamilyKind k);
FamilyKind parse_family(const std::string& name);

// Members φ_I(x) = 2^-k ψ_k(x - 2^-k j) for I = (k, j), generated by one
// prototype ψ_k per scale. ⟨f, φ_I⟩ for all I at a scale is one circular correlation.
class AdaptedFamily {
 public:
  AdaptedFamily() = default;
  AdaptedFamily(FamilyKind kind, ScaleSet prototypes, bool zero_mean);

  FamilyKind kind() const { return kind_; }
  int log_size() const { return protos_.L; }
  std::size_t size() const { return std::size_t{1} << protos_.L; }
  int scales() const { return protos_.K; }
  bool zero_mean() const { return zero_mean_; }
  double floor() const { return floor_; }
  int k0() const { return k0_; }
  const std::vector<double>& constants() const { return constants_; }

  const GridFunction& prototype(int k) const { return protos_.at(k); }
  const Spectrum& prototype_spectrum(int k) const { return protos_.hat(k); }
  const ScaleSet& prototypes() const { return protos_; }

  // φ_I.
  GridFunction member(const DyadicInterval& I) const;
  // |I|^{-1/2} φ_I.
  GridFunction normalized_member(const DyadicInterval& I) const;
  // 2^-k ψ_k(x - s/N): the scale-k member whose reference interval starts at sample s.
  GridFunction member_at(int k, long s) const;

  // ⟨f, member_at(k, s)⟩ for every shift s, from the spectrum of f.
  GridFunction correlate(const Spectrum& fhat, int k) const;

  // ψ_k(x - s/N) for the whole family.
  AdaptedFamily translated(long s) const;

  void set_floor(double a, int k0) { floor_ = a; k0_ = k0; }
  void set_constants(std::vector<double> c) { constants_ = std::move(c); }

 private:
  FamilyKind kind_ = FamilyKind::custom;
  ScaleSet protos_;
  bool zero_mean_ = false;
  double floor_ = 0.0;
  int k0_ = 0;
  std::vector<double> constants_;
};

AdaptedFamily make_adapted_family(FamilyKind kind, int K, int L);

struct AdaptationReport {
  std::vector<double> C;        // C[m] for m = 0..m_max
  std::vector<double> C_prime;  // derivative variant
  bool finite = true;
};
AdaptationReport verify_adapted(const AdaptedFamily& fam, int m_max);

// The same measurement over every member of a level, relative to its own interval.
double member_constant(const AdaptedFamily& fam, int k, int m);

struct AdaptedPiece {
  int k = 1;
  double weight = 1.0;   // 2^{-10k}
  TorusInterval support;  // 2^k I, concentric
  GridFunction piece;
};
std::vector<AdaptedPiece> decompose_adapted(const AdaptedFamily& fam, const DyadicInterval& I, bool preserve_mean);

// Smooth cutoff equal to 1 on the middle half of J and 0 off J.
GridFunction interval_cutoff(const TorusInterval& J, int L);

}  // namespace lpk
