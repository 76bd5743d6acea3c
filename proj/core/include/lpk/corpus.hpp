#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpk/grid.hpp"

namespace lpk {

// Families: trig, indicator, spike, power, log, constant (1D);
// trig2, rect, tensor, power2, log2, constant (2D).
// Parameters depend on the seed and the member index only, so one seed gives the
// same continuum functions at every resolution.
struct CorpusMember {
  std::string family;
  std::string label;  // family plus its parameters
  GridFunction f;
};

struct CorpusOptions {
  std::size_t per_family = 20;
  bool include_constant = true;
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<int> log_sizes;
  std::vector<CorpusMember> members;

  std::size_t size() const { return members.size(); }
  const GridFunction& operator[](std::size_t i) const { return members[i].f; }
  std::vector<GridFunction> functions() const;
  std::vector<CorpusMember> family(const std::string& name) const;
};

Corpus generate_corpus(std::uint64_t seed, std::vector<int> log_sizes, CorpusOptions options = {});

// dist(x, x0)^{-β} on T, distances clamped below at half the grid spacing.
GridFunction power_singular(int L, double x0, double beta);
// log(1/dist(x, x0))^s on T with the same clamp.
GridFunction log_singular(int L, double x0, double s);
// h χ_{[x0, x0 + w)}.
GridFunction spike(int L, double x0, double width, double height);

// SplitMix64 step, used to derive independent streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace lpk
