#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lpk/grid.hpp"

namespace lpk {

enum class SymbolClass { marcinkiewicz, coifman_meyer, biparameter };
const char* symbol_class_name(SymbolClass c);

// m on R, R^2 or R^4. Arguments are ordered (s) / (s, t) / (s1, s2, t1, t2):
// the frequencies of the first slot come first.
class MultiplierSymbol {
 public:
  using Evaluator = std::function<cplx(std::span<const double>)>;

  MultiplierSymbol() = default;
  MultiplierSymbol(std::string name, SymbolClass cls, Evaluator eval);

  const std::string& name() const { return name_; }
  SymbolClass symbol_class() const { return cls_; }
  int arity() const { return cls_ == SymbolClass::marcinkiewicz ? 1 : 2; }
  int parameters() const { return cls_ == SymbolClass::biparameter ? 2 : 1; }
  int domain_dims() const { return arity() * parameters(); }
  // Smoothness order the class asks for: 4, d(d+3) with d = 2, or twice that.
  int derivative_budget() const;

  cplx operator()(std::span<const double> x) const { return eval_(x); }
  cplx operator()(double t) const;
  cplx operator()(double s, double t) const;
  cplx operator()(double s1, double s2, double t1, double t2) const;

 private:
  std::string name_;
  SymbolClass cls_ = SymbolClass::marcinkiewicz;
  Evaluator eval_;
};

// Built-in symbols:
//   constant, hilbert, oscillatory, mean_remover                (one slot)
//   bilinear_constant, cm_ratio, cm_product                     (two slots)
//   bp_constant, bp_ratio, bp_product, bp_mixed                 (two slots, two parameters)
MultiplierSymbol make_symbol(const std::string& name);
std::vector<std::string> symbol_names();

// |t|^{iγ}, zero at the origin.
MultiplierSymbol oscillatory_symbol(double gamma);
// m(s1, s2, t1, t2) = a(s1, t1) b(s2, t2) for two bilinear symbols.
MultiplierSymbol product_symbol(const MultiplierSymbol& a, const MultiplierSymbol& b);

struct SymbolValidation {
  std::string name;
  SymbolClass cls = SymbolClass::marcinkiewicz;
  long radius = 0;
  int order = 0;                   // per-coordinate difference order probed
  std::vector<double> constants;   // sup |Δ^α m| · scale^{|α|}, indexed by |α|
  double ceiling = 0.0;            // order l passes when its constant is at most ceiling · l!
  bool pass = false;
};

inline constexpr int kDefaultProbeOrder = 4;
inline constexpr double kDefaultSymbolCeiling = 1e3;

// Unit-step finite differences, taken away from the singular set, at lattice points
// whose distance to it lies in [radius / 4, radius].
SymbolValidation validate_symbol(const MultiplierSymbol& m, long radius, int order = kDefaultProbeOrder,
                                 double ceiling = kDefaultSymbolCeiling);

}  // namespace lpk
