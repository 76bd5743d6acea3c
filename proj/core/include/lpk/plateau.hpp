#pragma once

namespace lpk {

// C-infinity step: 0 for x <= 0, 1 for x >= 1, built from exp(-1/x).
double smooth_step(double x);

// Smooth bump equal to 1 on [b, c] and 0 outside (a, d).
class Plateau {
 public:
  Plateau() = default;
  Plateau(double a, double b, double c, double d);

  double operator()(double x) const;
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

 private:
  double a_ = -1.0, b_ = -0.5, c_ = 0.5, d_ = 1.0;
};

Plateau build_plateau(double a, double b, double c, double d);

// Even profile of |x|: 1 on b <= |x| <= c, 0 for |x| <= a or |x| >= d, with 0 < a.
class Annulus {
 public:
  Annulus() = default;
  Annulus(double a, double b, double c, double d);
  double operator()(double x) const;

 private:
  Plateau p_;
};

}  // namespace lpk
