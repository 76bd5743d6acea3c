#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpk/corpus.hpp"
#include "lpk/norms.hpp"

namespace lpk {

using Operator = std::function<GridFunction(const std::vector<GridFunction>&)>;

struct NormReport {
  std::string op;
  std::vector<NormSpec> in;
  NormSpec out;
  std::vector<std::string> labels;
  std::vector<double> ratios;       // ‖T(f, ...)‖ / Π ‖inputs‖ per corpus entry
  std::vector<double> dual_ratios;  // weak outputs: the same through the dualization estimate
  double max_ratio = 0.0;
  double max_dual_ratio = 0.0;
  double drift = 0.0;  // relative change of max_ratio against a second resolution, when compared
  std::uint64_t seed = 0;
  std::string note;
};

// Largest A with |⟨F, χ_{E'}⟩| = A |E|^{1 - 1/p}, over super-level sets E of |F|, where E' drops the
// largest values of |F| on E and keeps just over half of its measure. Then
// A <= ‖F‖_{p,∞} <= 2 A, within the dualization constant 2^{3/2 + 2/p}.
double dual_weak_estimate(const GridFunction& F, double p);

// Inputs are corpus members; a bilinear operator takes members i and i + 1 (cyclically).
// Entries whose input norms vanish are skipped.
NormReport probe_norm(const std::string& op_id, const Operator& op, const std::vector<NormSpec>& in,
                      const NormSpec& out, const Corpus& corpus);

// |b - a| / a for two resolutions of one probe, stored in b.drift.
double compare_resolutions(const NormReport& a, NormReport& b);

}  // namespace lpk
