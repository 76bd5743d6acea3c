#pragma once

#include <array>
#include <string>

#include "lpk/adapted.hpp"
#include "lpk/grid.hpp"

namespace lpk {

// Families on the two axes of T^2; rectangle members are ϕ_I ⊗ ϕ_J.
struct FamilyPair {
  AdaptedFamily x;
  AdaptedFamily y;
};

enum class HybridKind { MM, MS, SM, SS };
HybridKind parse_hybrid(const std::string& text);
const char* hybrid_name(HybridKind k);

struct HybridShift {
  long nx = 0;
  long ny = 0;
  bool sup = false;  // per-rectangle sup over grid shifts α on both axes
};

inline constexpr long kMaxShiftsPerAxis2D = 8;

// M slots take sup_I (.) / |I|^{1/2}; S slots take the ℓ² sum with weight 1/|I|.
// Zero-mean is required on the S axes. Scale window: 1..K of each family.
GridFunction hybrid(const GridFunction& f, const FamilyPair& fams, HybridKind kind, HybridShift shift = {});

// Complex samples on a 2^L0 x 2^L1 x 2^L2 grid of T^3.
struct SampleCube {
  std::array<int, 3> log_sizes{6, 6, 6};
  cvec values;

  static SampleCube zeros(std::array<int, 3> log_sizes);
  static SampleCube sample(std::array<int, 3> log_sizes, const std::function<cplx(double, double, double)>& f);
  static SampleCube tensor(const GridFunction& a, const GridFunction& b, const GridFunction& c);

  std::size_t size(int axis) const { return std::size_t{1} << log_sizes.at(axis); }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * size(1) + j) * size(2) + k; }
  cplx at(std::size_t i, std::size_t j, std::size_t k) const { return values[index(i, j, k)]; }
  cplx& at(std::size_t i, std::size_t j, std::size_t k) { return values[index(i, j, k)]; }
};

inline constexpr std::size_t kMaxCubeSamples = std::size_t{1} << 21;

// kind is a word over {S, M} of length 3 (SSS, SSM, MSM, ...): each S axis joins the
// outer ℓ² sum, the M axes the inner sup. (S-first nesting; other orders by transposition.)
SampleCube hybrid3(const SampleCube& f, const std::array<AdaptedFamily, 3>& fams, const std::string& kind);

// Exact 1D maximal function along one axis of the cube.
SampleCube cube_directional_maximal(const SampleCube& f, int axis);

}  // namespace lpk
