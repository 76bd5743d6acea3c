#include "lpk/bumps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/plateau.hpp"

namespace lpk {

namespace {

const Plateau& pou_alpha() {
  static const Plateau p(-0.25, -0.125, 0.125, 0.25);
  return p;
}

const Annulus& pou_theta2() {
  static const Annulus a(1.0 / 32, 1.0 / 16, 0.25, 0.5);
  return a;
}

const Plateau& double_alpha() {
  static const Plateau p(-1.0 / 32, -1.0 / 64, 1.0 / 64, 1.0 / 32);
  return p;
}

const Annulus& gamma1() {
  static const Annulus a(1.0 / 512, 1.0 / 256, 1.0 / 16, 1.0 / 8);
  return a;
}

const Plateau& gamma2() {
  static const double w = 0.125 + 1.0 / 32;
  static const Plateau p(-0.25, -w, w, 0.25);
  return p;
}

double beta(double t) { return double_alpha()(t) - double_alpha()(2 * t); }
double beta1(int k, double t) { return beta(std::ldexp(t, -k)); }
double beta2(int k, double t) { return double_alpha()(std::ldexp(t, 3 - k)); }
double beta3(int k, double t) {
  double s = 0.0;
  for (int j = k - 2; j <= k + 2; ++j) s += beta1(j, t);
  return s;
}

void check_scales(int K, int L) {
  if (L < kMinLog || L > kMaxLog) throw DimensionError("grid exponent out of range");
  if (K < 1 || K > max_scales(L))
    throw LevelError("scale count " + std::to_string(K) + " exceeds L - 3 = " + std::to_string(max_scales(L)));
}

}  // namespace

int max_scales(int L) { return L - 3; }

ScaleSet scale_set_from_symbol(int K, int L, const std::function<double(int, double)>& symbol) {
  ScaleSet s;
  s.L = L;
  s.K = K;
  const std::size_t N = std::size_t{1} << L;
  for (int k = 1; k <= K; ++k) {
    Spectrum sp = Spectrum::zeros({L});
    for (std::size_t i = 0; i < N; ++i) sp.coefficients()[i] = symbol(k, static_cast<double>(frequency_of(i, N)));
    s.spatial.push_back(inverse_transform(sp));
    s.spectra.push_back(std::move(sp));
  }
  return s;
}

double pou_first_symbol(int k, double t) {
  return pou_alpha()(std::ldexp(t, -k)) - pou_alpha()(std::ldexp(t, 1 - k));
}

double pou_second_symbol(int k, double t) { return pou_theta2()(std::ldexp(t, -k)); }

PartitionOfUnity build_pou(int K, int L) {
  check_scales(K, L);
  return {scale_set_from_symbol(K, L, pou_first_symbol), scale_set_from_symbol(K, L, pou_second_symbol)};
}

PouCheck check_pou(const PartitionOfUnity& p) {
  PouCheck r;
  const int K = p.first.K;
  r.band = K >= 4 ? (1L << (K - 4)) : 0;
  auto total = [&](long n) {
    cplx s{};
    for (int k = 1; k <= K; ++k) s += p.first.hat(k).at(n) * p.second.hat(k).at(-n);
    return s;
  };
  r.origin = std::abs(total(0));
  for (long n = 1; n <= r.band; ++n) {
    r.residual = std::max(r.residual, std::abs(total(n) - 1.0));
    r.residual = std::max(r.residual, std::abs(total(-n) - 1.0));
  }
  const long half = static_cast<long>(p.first.hat(1).size() / 2);
  for (int k = 1; k <= K; ++k) {
    const double lo = std::ldexp(1.0, k - 4), hi = std::ldexp(1.0, k - 2);
    for (long n = -half; n < half; ++n) {
      double a = static_cast<double>(std::labs(n));
      if (a <= lo || a >= hi) r.leakage = std::max(r.leakage, std::abs(p.first.hat(k).at(n)));
    }
    r.second_mean = std::max(r.second_mean, std::abs(p.second.hat(k).at(0)));
  }
  return r;
}

double double_symbol(int a, int i, int k, double t) {
  static const int kind[3][3] = {{2, 1, 4}, {1, 2, 4}, {1, 3, 5}};
  switch (kind[a - 1][i - 1]) {
    case 1: return beta1(k, t);
    case 2: return beta2(k, t);
    case 3: return beta3(k, t);
    case 4: return gamma1()(std::ldexp(t, -k));
    default: return gamma2()(std::ldexp(t, -k));
  }
}

DoubleBumpSystem build_double_pou(int K, int L) {
  check_scales(K, L);
  DoubleBumpSystem s;
  s.L = L;
  s.K = K;
  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= 3; ++i)
      s.sets[a - 1][i - 1] = scale_set_from_symbol(K, L, [a, i](int k, double t) { return double_symbol(a, i, k, t); });
  return s;
}

DoubleCheck check_double_pou(const DoubleBumpSystem& s) {
  DoubleCheck r;
  const int K = s.K;
  r.band = K >= 6 ? (1L << (K - 6)) : 0;
  auto total = [&](long n1, long n2) {
    cplx v{};
    for (int a = 1; a <= 3; ++a)
      for (int k = 1; k <= K; ++k)
        v += s.at(a, 1).hat(k).at(n1) * s.at(a, 2).hat(k).at(n2) * s.at(a, 3).hat(k).at(-n1 - n2);
    return v;
  };
  r.origin = std::abs(total(0, 0));
  for (long n1 = -r.band; n1 <= r.band; ++n1)
    for (long n2 = -r.band; n2 <= r.band; ++n2)
      if (n1 != 0 || n2 != 0) r.residual = std::max(r.residual, std::abs(total(n1, n2) - 1.0));

  const long half = static_cast<long>(std::size_t{1} << s.L) / 2;
  for (int a = 1; a <= 3; ++a)
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= K; ++k) {
        const double hi = std::ldexp(1.0, k - 2), lo = std::ldexp(1.0, k - 10);
        for (long n = -half; n < half; ++n) {
          double t = static_cast<double>(std::labs(n));
          bool outside = a == i ? t > hi : (t > hi || t < lo);
          if (outside) r.leakage = std::max(r.leakage, std::abs(s.at(a, i).hat(k).at(n)));
        }
      }

  for (int a = 1; a <= 3; ++a)
    for (int k = 1; k <= K; ++k) {
      const long reach = std::min(half / 2 - 1, static_cast<long>(std::ldexp(1.0, k - 2)) + 1);
      for (long n1 = -reach; n1 <= reach; ++n1) {
        if (s.at(a, 1).hat(k).at(n1) == 0.0) continue;
        for (long n2 = -reach; n2 <= reach; ++n2) {
          if (s.at(a, 2).hat(k).at(n2) == 0.0) continue;
          r.absorption = std::max(r.absorption, std::abs(s.at(a, 3).hat(k).at(-n1 - n2) - 1.0));
        }
      }
    }
  return r;
}

}  // namespace lpk
