#include "lpk/symbol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "lpk/errors.hpp"

namespace lpk {

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

cplx ratio(double s, double t) { return s == 0.0 && t == 0.0 ? 0.0 : s * s / (s * s + t * t); }
cplx cross(double s, double t) { return s == 0.0 && t == 0.0 ? 0.0 : s * t / (s * s + t * t); }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Distances to the singular set: one per parameter.
std::array<double, 2> radii(SymbolClass c, std::span<const double> p) {
  switch (c) {
    case SymbolClass::marcinkiewicz: return {std::abs(p[0]), 0.0};
    case SymbolClass::coifman_meyer: return {std::hypot(p[0], p[1]), 0.0};
    case SymbolClass::biparameter: return {std::hypot(p[0], p[2]), std::hypot(p[1], p[3])};
  }
  return {0.0, 0.0};
}

std::vector<std::vector<double>> probe_points(SymbolClass c, long R) {
  std::vector<std::vector<double>> pts;
  const double lo = static_cast<double>(R) / 4.0, hi = static_cast<double>(R);
  auto inside = [&](double r) { return r >= lo && r <= hi; };
  if (c == SymbolClass::marcinkiewicz) {
    for (long t = -R; t <= R; ++t)
      if (inside(std::abs(static_cast<double>(t)))) pts.push_back({static_cast<double>(t)});
    return pts;
  }
  const int d = c == SymbolClass::coifman_meyer ? 2 : 4;
  const std::size_t want = d == 2 ? 2048 : 384;
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(R));
  std::uniform_int_distribution<long> u(-R, R);
  std::vector<double> p(static_cast<std::size_t>(d));
  for (std::size_t tries = 0; pts.size() < want && tries < 200 * want; ++tries) {
    for (auto& x : p) x = static_cast<double>(u(rng));
    const auto r = radii(c, p);
    if (inside(r[0]) && (d == 2 || inside(r[1]))) pts.push_back(p);
  }
  return pts;
}

}  // namespace

const char* symbol_class_name(SymbolClass c) {
  switch (c) {
    case SymbolClass::marcinkiewicz: return "marcinkiewicz";
    case SymbolClass::coifman_meyer: return "coifman_meyer";
    case SymbolClass::biparameter: return "biparameter";
  }
  return "?";
}

MultiplierSymbol::MultiplierSymbol(std::string name, SymbolClass cls, Evaluator eval)
    : name_(std::move(name)), cls_(cls), eval_(std::move(eval)) {
  if (!eval_) throw ContractError("symbol '" + name_ + "' has no evaluator");
}

int MultiplierSymbol::derivative_budget() const {
  switch (cls_) {
    case SymbolClass::marcinkiewicz: return 4;
    case SymbolClass::coifman_meyer: return 10;
    case SymbolClass::biparameter: return 20;
  }
  return 0;
}

cplx MultiplierSymbol::operator()(double t) const {
  const std::array<double, 1> x{t};
  return eval_(x);
}
cplx MultiplierSymbol::operator()(double s, double t) const {
  const std::array<double, 2> x{s, t};
  return eval_(x);
}
cplx MultiplierSymbol::operator()(double s1, double s2, double t1, double t2) const {
  const std::array<double, 4> x{s1, s2, t1, t2};
  return eval_(x);
}

MultiplierSymbol oscillatory_symbol(double gamma) {
  return MultiplierSymbol("oscillatory", SymbolClass::marcinkiewicz, [gamma](std::span<const double> x) -> cplx {
    if (x[0] == 0.0) return 0.0;
    return std::polar(1.0, gamma * std::log(std::abs(x[0])));
  });
}

MultiplierSymbol product_symbol(const MultiplierSymbol& a, const MultiplierSymbol& b) {
  if (a.symbol_class() != SymbolClass::coifman_meyer || b.symbol_class() != SymbolClass::coifman_meyer)
    throw ContractError("product symbols are built from two bilinear symbols");
  return MultiplierSymbol(a.name() + "*" + b.name(), SymbolClass::biparameter,
                          [a, b](std::span<const double> x) { return a(x[0], x[2]) * b(x[1], x[3]); });
}

MultiplierSymbol make_symbol(const std::string& name) {
  using S = std::span<const double>;
  const auto M = SymbolClass::marcinkiewicz, C = SymbolClass::coifman_meyer;
  if (name == "constant") return {name, M, [](S) -> cplx { return 1.0; }};
  if (name == "hilbert") return {name, M, [](S x) { return cplx(0.0, -sgn(x[0])); }};
  if (name == "oscillatory") return oscillatory_symbol(1.0);
  if (name == "mean_remover") return {name, M, [](S x) -> cplx { return x[0] != 0.0 ? 1.0 : 0.0; }};
  if (name == "bilinear_constant") return {name, C, [](S) -> cplx { return 1.0; }};
  if (name == "cm_ratio") return {name, C, [](S x) { return ratio(x[0], x[1]); }};
  if (name == "cm_product") return {name, C, [](S x) { return cross(x[0], x[1]); }};
  if (name == "bp_constant")
    return {name, SymbolClass::biparameter, [](S) -> cplx { return 1.0; }};
  auto named = [](MultiplierSymbol m, std::string n) {
    return MultiplierSymbol(std::move(n), m.symbol_class(), [m](S x) { return m(x); });
  };
  if (name == "bp_ratio") return named(product_symbol(make_symbol("cm_ratio"), make_symbol("cm_ratio")), name);
  if (name == "bp_product") return named(product_symbol(make_symbol("cm_product"), make_symbol("cm_product")), name);
  if (name == "bp_mixed") return named(product_symbol(make_symbol("cm_ratio"), make_symbol("cm_product")), name);
  throw ParseError("unknown symbol '" + name + "'");
}

std::vector<std::string> symbol_names() {
  return {"constant",   "hilbert",     "oscillatory", "mean_remover", "bilinear_constant", "cm_ratio",
          "cm_product", "bp_constant", "bp_ratio",    "bp_product",   "bp_mixed"};
}

SymbolValidation validate_symbol(const MultiplierSymbol& m, long radius, int order, double ceiling) {
  if (radius < 16) throw DomainError("probe radius must be at least 16");
  if (order < 0 || order > 6) throw DomainError("difference order must lie in [0, 6]");
  const int d = m.domain_dims();
  const int side = order + 1;
  std::size_t cells = 1;
  for (int a = 0; a < d; ++a) cells *= static_cast<std::size_t>(side);

  SymbolValidation rep;
  rep.name = m.name();
  rep.cls = m.symbol_class();
  rep.radius = radius;
  rep.order = order;
  rep.ceiling = ceiling;
  rep.constants.assign(static_cast<std::size_t>(order * d + 1), 0.0);

  std::vector<cplx> table(cells), line(static_cast<std::size_t>(side));
  std::vector<double> pt(static_cast<std::size_t>(d));
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (const auto& base : probe_points(m.symbol_class(), radius)) {
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t r = c;
      for (int a = d - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(r % side);
        r /= side;
        pt[a] = base[a] + (base[a] >= 0.0 ? idx[a] : -idx[a]);
      }
      table[c] = m(pt);
    }
    // Forward differences along each axis turn values into Δ^α at the base point.
    std::size_t stride = 1;
    for (int a = d - 1; a >= 0; --a) {
      for (std::size_t c = 0; c < cells; ++c) {
        if ((c / stride) % side != 0) continue;
        for (int j = 0; j < side; ++j) line[j] = table[c + j * stride];
        for (int j = 0; j < side; ++j) {
          cplx v{};
          for (int i = 0; i <= j; ++i) v += ((j - i) % 2 ? -1.0 : 1.0) * binomial(j, i) * line[i];
          table[c + j * stride] = v;
        }
      }
      stride *= static_cast<std::size_t>(side);
    }
    const auto r = radii(m.symbol_class(), base);
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t q = c;
      int total = 0;
      std::array<int, 4> alpha{};
      for (int a = d - 1; a >= 0; --a) {
        alpha[a] = static_cast<int>(q % side);
        q /= side;
        total += alpha[a];
      }
      double scale;
      if (m.symbol_class() == SymbolClass::biparameter)
        scale = std::pow(r[0], alpha[0] + alpha[2]) * std::pow(r[1], alpha[1] + alpha[3]);
      else
        scale = std::pow(r[0], total);
      auto& k = rep.constants[static_cast<std::size_t>(total)];
      k = std::max(k, std::abs(table[c]) * scale);
    }
  }
  rep.pass = true;
  double fact = 1.0;
  for (std::size_t l = 0; l < rep.constants.size(); ++l) {
    if (l > 1) fact *= static_cast<double>(l);
    rep.pass = rep.pass && std::isfinite(rep.constants[l]) && rep.constants[l] <= ceiling * fact;
  }
  return rep;
}

}  // namespace lpk
