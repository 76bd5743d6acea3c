#pragma once

#include <optional>
#include <string>

#include "lpk/adapted.hpp"
#include "lpk/coefficients.hpp"
#include "lpk/grid.hpp"

namespace lpk {

// At most this many grid shifts α per scale in averaged and sup variants.
inline constexpr long kMaxShiftsPerScale = 64;

// Grid shifts r (in samples, 0 <= r < len) used for a scale of length len.
std::vector<long> alpha_shifts(long len, long cap = kMaxShiftsPerScale);

struct SquareMode {
  enum class Tag { plain, shifted, shifted_sup };
  Tag tag = Tag::plain;
  long n = 0;
  static SquareMode plain() { return {}; }
  static SquareMode shifted(long n) { return {Tag::shifted, n}; }
  static SquareMode shifted_sup(long n) { return {Tag::shifted_sup, n}; }
  // plain | shifted:n | sup:n
  static SquareMode parse(const std::string& text);
  std::string label() const;
};

GridFunction square_function(const GridFunction& f, const AdaptedFamily& fam, SquareMode mode = {});

struct LinearShift {
  long n = 0;
  bool average = false;  // uniform average over grid shifts α, outer family shifted by α
};

// T_ε f = Σ_I ε_I ⟨f, ϕ¹_I⟩ ϕ²_I over the scales of the families.
GridFunction linearize(const GridFunction& f, const AdaptedFamily& fam1, const AdaptedFamily& fam2,
                       const EpsilonSequence& eps, std::optional<LinearShift> shift = std::nullopt);

}  // namespace lpk
