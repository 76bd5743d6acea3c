#include "lpk/probes.hpp"

#include <algorithm>
#include <cmath>

#include "lpk/errors.hpp"

namespace lpk {

double dual_weak_estimate(const GridFunction& F, double p) {
  std::vector<double> v = F.magnitudes();
  std::sort(v.begin(), v.end(), std::greater<>());
  const double n = static_cast<double>(v.size());
  std::vector<double> prefix(v.size() + 1, 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i];
  double best = 0.0;
  std::size_t m = 0;
  while (m < v.size() && v[m] > 0.0) {
    std::size_t e = m;
    while (e < v.size() && v[e] == v[m]) ++e;
    // E = the top e samples; E' = its lowest ceil((e + 1) / 2) samples
    const std::size_t keep = (e + 2) / 2;
    const double mass = (prefix[e] - prefix[e - keep]) / n;
    best = std::max(best, mass / std::pow(static_cast<double>(e) / n, 1.0 - 1.0 / p));
    m = e;
  }
  return best;
}

NormReport probe_norm(const std::string& op_id, const Operator& op, const std::vector<NormSpec>& in,
                      const NormSpec& out, const Corpus& corpus) {
  if (in.empty() || in.size() > 2) throw ContractError("probes take one or two inputs");
  NormReport r;
  r.op = op_id;
  r.in = in;
  r.out = out;
  r.seed = corpus.seed;
  const std::size_t n = corpus.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GridFunction> args{corpus[i]};
    std::string label = corpus.members[i].label;
    if (in.size() == 2) {
      args.push_back(corpus[(i + 1) % n]);
      label += " x " + corpus.members[(i + 1) % n].label;
    }
    double denom = 1.0;
    for (std::size_t a = 0; a < args.size(); ++a) denom *= norm(args[a], in[a]);
    if (!(denom > 1e-300)) continue;
    const GridFunction y = op(args);
    r.labels.push_back(label);
    r.ratios.push_back(norm(y, out) / denom);
    if (out.kind == NormSpec::Kind::WeakLp) r.dual_ratios.push_back(dual_weak_estimate(y, out.p) / denom);
  }
  if (!r.ratios.empty()) r.max_ratio = *std::max_element(r.ratios.begin(), r.ratios.end());
  if (!r.dual_ratios.empty()) r.max_dual_ratio = *std::max_element(r.dual_ratios.begin(), r.dual_ratios.end());
  return r;
}

double compare_resolutions(const NormReport& a, NormReport& b) {
  b.drift = a.max_ratio > 0.0 ? std::abs(b.max_ratio - a.max_ratio) / a.max_ratio : 0.0;
  return b.drift;
}

}  // namespace lpk
