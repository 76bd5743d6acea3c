#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lpk/adapted.hpp"
#include "lpk/coefficients.hpp"
#include "lpk/grid.hpp"

namespace lpk {

struct ParaproductShift {
  // One parameter: n[0] shifts the first slot, n[1] the second.
  // Two parameters: (n[0], n[1]) shift the first slot on (x, y), (n[2], n[3]) the second.
  std::array<long, 4> n{};
  bool average = true;  // uniform average over grid shifts α; otherwise α = 0
};

// Slot i uses family x[i-1] (and y[i-1] on the second axis). Families at slots other
// than slot_a (slot_b on the second axis) must have zero mean.
struct ParaproductSpec {
  int params = 1;
  int slot_a = 1;
  int slot_b = 1;
  std::vector<AdaptedFamily> x;
  std::vector<AdaptedFamily> y;
  EpsilonSequence eps;
  RectEpsilon rect_eps;
  std::optional<ParaproductShift> shift;
};

// Σ_I ε_I |I|^{-1/2} ⟨f, ϕ¹_I⟩ ⟨g, ϕ²_I⟩ ϕ³_I over the resolved scales.
GridFunction paraproduct_1p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g);
// Σ_R ε_R |R|^{-1/2} ⟨f, ϕ¹_R⟩ ⟨g, ϕ²_R⟩ ϕ³_R over dyadic rectangles R = I x J.
GridFunction paraproduct_2p(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g);
GridFunction paraproduct(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g);

// Σ ε |I|^{-1/2} ⟨f, ϕ¹⟩ ⟨g, ϕ²⟩ conj⟨h, ϕ³⟩, which equals ⟨T(f, g), h⟩.
cplx paraproduct_pairing(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g,
                         const GridFunction& h);

// Validates slots, family count, grids and the zero-mean contract.
void check_spec(const ParaproductSpec& spec, const GridFunction& f, const GridFunction& g);

}  // namespace lpk
