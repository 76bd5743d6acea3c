#include "lpk/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lpk/errors.hpp"

namespace lpk {

NormSpec NormSpec::lp(double p) {
  if (!(p > 0)) throw DomainError("Lp exponent must be positive");
  return {Kind::Lp, p};
}

NormSpec NormSpec::weak(double p) {
  if (!(p > 0)) throw DomainError("weak-Lp exponent must be positive");
  return {Kind::WeakLp, p};
}

std::string NormSpec::label() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Lp: os << "L" << p; break;
    case Kind::Linf: os << "Linf"; break;
    case Kind::WeakLp: os << "weak" << p; break;
  }
  return os.str();
}

NormSpec NormSpec::parse(const std::string& text) {
  try {
    if (text == "Linf" || text == "inf") return linf();
    if (text.rfind("weak", 0) == 0) return weak(std::stod(text.substr(4)));
    if (text.rfind("L", 0) == 0) return lp(std::stod(text.substr(1)));
  } catch (const std::logic_error&) {
  }
  throw ParseError("unrecognized norm '" + text + "'");
}

double norm_of_magnitudes(std::span<const double> mags, const NormSpec& spec) {
  const double n = static_cast<double>(mags.size());
  switch (spec.kind) {
    case NormSpec::Kind::Linf:
      return mags.empty() ? 0.0 : *std::max_element(mags.begin(), mags.end());
    case NormSpec::Kind::Lp: {
      if (spec.p == 2.0) {
        double s = 0.0;
        for (double m : mags) s += m * m;
        return std::sqrt(s / n);
      }
      if (spec.p == 1.0) {
        double s = 0.0;
        for (double m : mags) s += m;
        return s / n;
      }
      double s = 0.0;
      for (double m : mags) s += std::pow(m, spec.p);
      return std::pow(s / n, 1.0 / spec.p);
    }
    case NormSpec::Kind::WeakLp: {
      // sup_λ λ |{|f| > λ}|^{1/p}: approached as λ rises to each sample value,
      // where the measure is the fraction of samples with |f| >= that value.
      std::vector<double> s(mags.begin(), mags.end());
      std::sort(s.begin(), s.end(), std::greater<>());
      double best = 0.0;
      std::size_t i = 0;
      while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        best = std::max(best, s[i] * std::pow(static_cast<double>(j) / n, 1.0 / spec.p));
        i = j;
      }
      return best;
    }
  }
  return 0.0;
}

double norm(const GridFunction& f, const NormSpec& spec) {
  auto m = f.magnitudes();
  return norm_of_magnitudes(m, spec);
}

}  // namespace lpk
