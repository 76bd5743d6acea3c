#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lpk/grid.hpp"

namespace oracle {

using lpk::cplx;
using lpk::cvec;

inline cplx expi(double theta) { return std::polar(1.0, theta); }

// f̂(n) = mean_x f(x) e^{-2πinx}, in transform order.
inline cvec dft(const cvec& f) {
  const std::size_t N = f.size();
  cvec out(N);
  for (std::size_t i = 0; i < N; ++i) {
    cplx s{};
    for (std::size_t j = 0; j < N; ++j)
      s += f[j] * expi(-2.0 * std::numbers::pi * static_cast<double>((i * j) % N) / static_cast<double>(N));
    out[i] = s / static_cast<double>(N);
  }
  return out;
}

inline cvec dft2(const cvec& f, std::size_t N0, std::size_t N1) {
  cvec out(N0 * N1);
  for (std::size_t a = 0; a < N0; ++a)
    for (std::size_t b = 0; b < N1; ++b) {
      cplx s{};
      for (std::size_t i = 0; i < N0; ++i)
        for (std::size_t j = 0; j < N1; ++j) {
          const double ph = static_cast<double>((a * i) % N0) / N0 + static_cast<double>((b * j) % N1) / N1;
          s += f[i * N1 + j] * expi(-2.0 * std::numbers::pi * ph);
        }
      out[a * N1 + b] = s / static_cast<double>(N0 * N1);
    }
  return out;
}

inline cvec convolve(const cvec& f, const cvec& g) {
  const std::size_t N = f.size();
  cvec out(N);
  for (std::size_t x = 0; x < N; ++x) {
    cplx s{};
    for (std::size_t y = 0; y < N; ++y) s += f[y] * g[(x + N - y) % N];
    out[x] = s / static_cast<double>(N);
  }
  return out;
}

// sup over every arc of whole cells containing x, by direct summation.
inline std::vector<double> hl(const std::vector<double>& m) {
  const std::size_t N = m.size();
  std::vector<double> out(N, 0.0);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t len = 1; len <= N; ++len) {
      double sum = 0.0;
      for (std::size_t i = 0; i < len; ++i) sum += m[(s + i) % N];
      const double avg = sum / static_cast<double>(len);
      for (std::size_t i = 0; i < len; ++i) out[(s + i) % N] = std::max(out[(s + i) % N], avg);
    }
  return out;
}

// sup over dyadic ancestors at levels 1..L of each cell.
inline std::vector<double> dyadic(const std::vector<double>& m) {
  const std::size_t N = m.size();
  std::vector<double> out(N, 0.0);
  for (std::size_t len = 1; len < N; len *= 2)
    for (std::size_t x = 0; x < N; ++x) {
      const std::size_t start = x / len * len;
      double sum = 0.0;
      for (std::size_t i = start; i < start + len; ++i) sum += m[i];
      out[x] = std::max(out[x], sum / static_cast<double>(len));
    }
  return out;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct Legendre {
  std::vector<double> x, w;
  explicit Legendre(int n) {
    for (int i = 1; i <= n; ++i) {
      double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5)), dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x.push_back(z);
      w.push_back(2.0 / ((1.0 - z * z) * dp * dp));
    }
  }
  template <class F>
  double integrate(F&& f, double a, double b) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(0.5 * (b - a) * x[i] + 0.5 * (a + b));
    return 0.5 * (b - a) * s;
  }
};

// Decreasing rearrangement of grid magnitudes as sorted cell values.
inline std::vector<double> sorted_desc(std::vector<double> m) {
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

// ∫_0^∞ f*(t e^{-u}) e^{-u} u^{n-2}/(n-2)! du, split at the cell boundaries of f*.
inline double n_star(const std::vector<double>& desc, int n, double t) {
  static const Legendre gl(40);
  const double N = static_cast<double>(desc.size());
  double fact = 1.0;
  for (int i = 2; i <= n - 2; ++i) fact *= i;
  auto kernel = [&](double u) { return std::exp(-u) * std::pow(u, n - 2) / fact; };
  double s = 0.0;
  // cell m occupies [m/N, (m+1)/N); t e^{-u} lies there for u in (log(tN/(m+1)), log(tN/m)].
  for (std::size_t m = 0; m < desc.size(); ++m) {
    const double hi_t = std::min(t, (m + 1) / N), lo_t = m / N;
    if (lo_t >= t) break;
    const double u0 = std::log(t / hi_t);
    if (m == 0) {
      double a = u0;
      for (int piece = 0; piece < 8; ++piece, a += 10.0) s += desc[0] * gl.integrate(kernel, a, a + 10.0);
    } else {
      s += desc[m] * gl.integrate(kernel, u0, std::log(t / lo_t));
    }
  }
  return s;
}

// (1/n!) ∫_0^1 f* log(1/t)^n dt via t = e^{-u}.
inline double zygmund(const std::vector<double>& desc, int n) {
  static const Legendre gl(40);
  const double N = static_cast<double>(desc.size());
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  auto kernel = [&](double u) { return std::exp(-u) * std::pow(u, n) / fact; };
  double s = 0.0;
  for (std::size_t m = 0; m < desc.size(); ++m) {
    const double u0 = std::log(N / (m + 1));
    if (m == 0) {
      double a = u0;
      for (int piece = 0; piece < 10; ++piece, a += 10.0) s += desc[0] * gl.integrate(kernel, a, a + 10.0);
    } else {
      s += desc[m] * gl.integrate(kernel, u0, std::log(N / m));
    }
  }
  return s;
}

}  // namespace oracle

namespace oracle {

// sup over arcs I ∋ x of the average over I shifted by n|I|.
inline std::vector<double> shifted_hl(const std::vector<double>& m, long n) {
  const long N = static_cast<long>(m.size());
  std::vector<double> out(m.size(), 0.0);
  for (long s = 0; s < N; ++s)
    for (long len = 1; len <= N; ++len) {
      double sum = 0.0;
      for (long i = 0; i < len; ++i) sum += m[static_cast<std::size_t>((((s + n * len + i) % N) + N) % N)];
      const double avg = sum / static_cast<double>(len);
      for (long i = 0; i < len; ++i) {
        auto& o = out[static_cast<std::size_t>((s + i) % N)];
        o = std::max(o, avg);
      }
    }
  return out;
}

// sup over rectangles with power-of-two sides at any offset, row-major N0 x N1.
inline std::vector<double> strong(const std::vector<double>& m, std::size_t N0, std::size_t N1) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t a = 1; a <= N0; a *= 2)
    for (std::size_t b = 1; b <= N1; b *= 2)
      for (std::size_t i0 = 0; i0 < N0; ++i0)
        for (std::size_t j0 = 0; j0 < N1; ++j0) {
          double sum = 0.0;
          for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) sum += m[((i0 + i) % N0) * N1 + (j0 + j) % N1];
          const double avg = sum / static_cast<double>(a * b);
          for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) {
              auto& o = out[((i0 + i) % N0) * N1 + (j0 + j) % N1];
              o = std::max(o, avg);
            }
        }
  return out;
}

}  // namespace oracle
