#pragma once

#include <span>
#include <string>

#include "lpk/grid.hpp"

namespace lpk {

struct NormSpec {
  enum class Kind { Lp, Linf, WeakLp };
  Kind kind = Kind::Lp;
  double p = 2.0;

  static NormSpec lp(double p);
  static NormSpec linf() { return {Kind::Linf, 0.0}; }
  static NormSpec weak(double p);

  // "L2", "L1.5", "Linf", "weak1" ...
  std::string label() const;
  static NormSpec parse(const std::string& text);
};

double norm(const GridFunction& f, const NormSpec& spec);
// Same norm on a list of magnitudes, each carrying mass 1/size.
double norm_of_magnitudes(std::span<const double> mags, const NormSpec& spec);

}  // namespace lpk
