#pragma once

#include <string>
#include <vector>

#include "lpk/adapted.hpp"
#include "lpk/grid.hpp"

namespace lpk {

struct MaximalKind {
  enum class Tag { hl, dyadic, shifted, shifted_sup, strong, directional };
  Tag tag = Tag::hl;
  long n = 0;    // shift for shifted kinds
  int axis = 0;  // for directional

  static MaximalKind hl() { return {Tag::hl, 0, 0}; }
  static MaximalKind dyadic() { return {Tag::dyadic, 0, 0}; }
  static MaximalKind shifted(long n) { return {Tag::shifted, n, 0}; }
  static MaximalKind shifted_sup(long n) { return {Tag::shifted_sup, n, 0}; }
  static MaximalKind strong() { return {Tag::strong, 0, 0}; }
  static MaximalKind directional(int axis) { return {Tag::directional, 0, axis}; }

  // hl | dyadic | strong | shifted:n | sup:n | dir:j
  static MaximalKind parse(const std::string& text);
  std::string label() const;
};

GridFunction maximal(const GridFunction& f, const MaximalKind& kind);

// Exact 1D maximal function of a line of magnitudes, all grid intervals.
std::vector<double> hl_line(const std::vector<double>& mags);

// 1D sup of averages over grid intervals of power-of-two length, any offset.
GridFunction maximal_pow2(const GridFunction& f);

// sup_I |⟨f, φ_I⟩| / |I| on I.
GridFunction adapted_maximal(const GridFunction& f, const AdaptedFamily& fam);

// (Σ_k (M f_k)^r)^{1/r}; r = infinity gives sup_k, r = 1 the plain sum.
GridFunction vector_maximal(const std::vector<GridFunction>& fs, double r, const MaximalKind& kind);

}  // namespace lpk
