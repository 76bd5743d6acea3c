#include "lpk/plateau.hpp"

#include <cmath>

#include "lpk/errors.hpp"

namespace lpk {

namespace {
double edge(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double u = edge(x), v = edge(1.0 - x);
  return u / (u + v);
}

Plateau::Plateau(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(a < b && b <= c && c < d)) throw DomainError("plateau abscissae must satisfy a < b <= c < d");
}

double Plateau::operator()(double x) const {
  if (x <= a_ || x >= d_) return 0.0;
  if (x < b_) return smooth_step((x - a_) / (b_ - a_));
  if (x <= c_) return 1.0;
  return smooth_step((d_ - x) / (d_ - c_));
}

Plateau build_plateau(double a, double b, double c, double d) { return Plateau(a, b, c, d); }

Annulus::Annulus(double a, double b, double c, double d) : p_(a, b, c, d) {
  if (!(a > 0.0)) throw DomainError("annulus inner radius must be positive");
}

double Annulus::operator()(double x) const { return p_(std::fabs(x)); }

}  // namespace lpk
