#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"

namespace lpk {

namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

class PlanCache {
 public:
  // axis < 0 transforms every axis; otherwise only that axis of a row-major array.
  fftw_plan get(const std::vector<std::size_t>& dims, bool inverse, int axis = -1) {
    std::lock_guard lock(mu_);
    auto key = std::make_tuple(dims, inverse, axis);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second.get();
    std::size_t count = 1;
    for (auto d : dims) count *= d;
    cvec scratch(count);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const int sign = inverse ? FFTW_BACKWARD : FFTW_FORWARD;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p = nullptr;
    if (axis < 0) {
      std::vector<int> n(dims.begin(), dims.end());
      p = fftw_plan_dft(static_cast<int>(n.size()), n.data(), buf, buf, sign, flags);
    } else {
      std::size_t inner = 1;
      for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < dims.size(); ++a) inner *= dims[a];
      const std::size_t len = dims[static_cast<std::size_t>(axis)], outer = count / (len * inner);
      fftw_iodim dim{static_cast<int>(len), static_cast<int>(inner), static_cast<int>(inner)};
      fftw_iodim loops[2] = {{static_cast<int>(outer), static_cast<int>(len * inner), static_cast<int>(len * inner)},
                             {static_cast<int>(inner), 1, 1}};
      p = fftw_plan_guru_dft(1, &dim, 2, loops, buf, buf, sign, flags);
    }
    if (!p) throw Error("transform planner failed");
    plans_.emplace(key, Plan(p));
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<std::vector<std::size_t>, bool, int>, Plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

std::vector<std::size_t> extents(const std::vector<int>& log_sizes) {
  std::vector<std::size_t> d;
  for (int L : log_sizes) d.push_back(std::size_t{1} << L);
  return d;
}

}  // namespace

void fft_inplace(cvec& data, const std::vector<std::size_t>& dims, bool inverse) {
  std::size_t count = 1;
  for (auto d : dims) count *= d;
  if (count != data.size()) throw DimensionError("transform extents do not match data");
  fftw_plan p = cache().get(dims, inverse);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, buf, buf);
}

void fft_axis_inplace(cvec& data, const std::vector<std::size_t>& dims, std::size_t axis, bool inverse) {
  std::size_t count = 1;
  for (auto d : dims) count *= d;
  if (count != data.size() || axis >= dims.size()) throw DimensionError("transform extents do not match data");
  fftw_plan p = cache().get(dims, inverse, static_cast<int>(axis));
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, buf, buf);
}

Spectrum fourier_coefficients(const GridFunction& f) {
  cvec c = f.values();
  fft_inplace(c, extents(f.log_sizes()), false);
  const double scale = 1.0 / static_cast<double>(c.size());
  for (auto& v : c) v *= scale;
  return Spectrum(f.log_sizes(), std::move(c));
}

GridFunction inverse_transform(const Spectrum& s) {
  cvec v = s.coefficients();
  fft_inplace(v, extents(s.log_sizes()), true);
  return GridFunction(s.log_sizes(), std::move(v));
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw DimensionError("convolution operands differ in shape");
  Spectrum a = fourier_coefficients(f);
  Spectrum b = fourier_coefficients(g);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) a.coefficients()[i] *= b.coefficients()[i];
  return inverse_transform(a);
}

cplx inner_product(const GridFunction& f, const GridFunction& g) {
  if (!f.same_shape(g)) throw DimensionError("inner product operands differ in shape");
  cplx s{};
  for (std::size_t i = 0; i < f.count(); ++i) s += f[i] * std::conj(g[i]);
  return s / static_cast<double>(f.count());
}

cplx spectral_inner_product(const Spectrum& a, const Spectrum& b) {
  if (a.log_sizes() != b.log_sizes()) throw DimensionError("spectra differ in shape");
  cplx s{};
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    s += a.coefficients()[i] * std::conj(b.coefficients()[i]);
  return s;
}

GridFunction spectral_multiply(const GridFunction& f, const std::function<cplx(long)>& m) {
  if (f.dims() != 1) throw DimensionError("1D multiplier applied to a 2D function");
  Spectrum s = fourier_coefficients(f);
  for (std::size_t i = 0; i < s.size(); ++i) s.coefficients()[i] *= m(s.frequency(i));
  return inverse_transform(s);
}

GridFunction spectral_multiply(const GridFunction& f, const std::function<cplx(long, long)>& m) {
  if (f.dims() != 2) throw DimensionError("2D multiplier applied to a 1D function");
  Spectrum s = fourier_coefficients(f);
  const std::size_t N1 = s.size(1);
  for (std::size_t i = 0; i < s.size(0); ++i)
    for (std::size_t j = 0; j < N1; ++j)
      s.coefficients()[i * N1 + j] *= m(s.frequency(i, 0), s.frequency(j, 1));
  return inverse_transform(s);
}

}  // namespace lpk
