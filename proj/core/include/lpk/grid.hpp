#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace lpk {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

inline constexpr int kMinLog = 4;
inline constexpr int kMaxLog = 13;

// Samples of a function on the uniform dyadic grid of T or T^2.
// Axis a has 2^L_a points j / 2^L_a; values are row-major with the last axis fastest.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<int> log_sizes, cvec values);

  static GridFunction zeros(std::vector<int> log_sizes);
  static GridFunction constant(std::vector<int> log_sizes, cplx c);
  static GridFunction sample(int L, const std::function<cplx(double)>& f);
  static GridFunction sample(int L0, int L1, const std::function<cplx(double, double)>& f);

  int dims() const { return static_cast<int>(log_sizes_.size()); }
  const std::vector<int>& log_sizes() const { return log_sizes_; }
  std::size_t size(int axis = 0) const { return std::size_t{1} << log_sizes_.at(axis); }
  std::size_t count() const { return values_.size(); }
  bool same_shape(const GridFunction& o) const { return log_sizes_ == o.log_sizes_; }

  const cvec& values() const { return values_; }
  cvec& values() { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }
  cplx at(std::size_t i, std::size_t j) const { return values_[i * size(1) + j]; }
  cplx& at(std::size_t i, std::size_t j) { return values_[i * size(1) + j]; }

  std::vector<double> magnitudes() const;
  GridFunction abs() const;
  GridFunction conj() const;
  double mean_abs() const;
  cplx mean() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx c);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, cplx c) { return a *= c; }
  friend GridFunction operator*(cplx c, GridFunction a) { return a *= c; }

 private:
  std::vector<int> log_sizes_;
  cvec values_;
};

// Pointwise product f * g.
GridFunction pointwise(const GridFunction& f, const GridFunction& g);
// Tensor product (f ⊗ g)(x, y) = f(x) g(y) of two 1D functions.
GridFunction tensor(const GridFunction& f, const GridFunction& g);
double max_abs_diff(const GridFunction& f, const GridFunction& g);
double max_abs(const GridFunction& f);

// Fourier coefficients n in [-N/2, N/2) per axis, stored in transform order
// (index i holds n = i for i < N/2 and n = i - N otherwise).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<int> log_sizes, cvec coefficients);

  static Spectrum zeros(std::vector<int> log_sizes);

  int dims() const { return static_cast<int>(log_sizes_.size()); }
  const std::vector<int>& log_sizes() const { return log_sizes_; }
  std::size_t size(int axis = 0) const { return std::size_t{1} << log_sizes_.at(axis); }
  const cvec& coefficients() const { return coefficients_; }
  cvec& coefficients() { return coefficients_; }

  cplx at(long n) const { return coefficients_[slot(n, 0)]; }
  cplx& at(long n) { return coefficients_[slot(n, 0)]; }
  cplx at(long n0, long n1) const { return coefficients_[slot(n0, 0) * size(1) + slot(n1, 1)]; }
  cplx& at(long n0, long n1) { return coefficients_[slot(n0, 0) * size(1) + slot(n1, 1)]; }

  // Frequency stored at storage index i along an axis.
  long frequency(std::size_t i, int axis = 0) const;
  std::size_t slot(long n, int axis) const;

 private:
  std::vector<int> log_sizes_;
  cvec coefficients_;
};

long frequency_of(std::size_t i, std::size_t N);
std::size_t slot_of(long n, std::size_t N);

}  // namespace lpk
