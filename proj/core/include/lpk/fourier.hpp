#pragma once

#include <cstddef>
#include <vector>

#include "lpk/grid.hpp"

namespace lpk {

Spectrum fourier_coefficients(const GridFunction& f);
GridFunction inverse_transform(const Spectrum& s);

// (f * g)(x) = mean_y f(y) g(x - y), computed spectrally.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

// mean_x f(x) conj(g(x)).
cplx inner_product(const GridFunction& f, const GridFunction& g);
cplx spectral_inner_product(const Spectrum& a, const Spectrum& b);

// Unnormalized in-place transform of a row-major array with the given extents.
// Forward uses e^{-2 pi i}, inverse e^{+2 pi i}. Any rank; thread-safe.
void fft_inplace(cvec& data, const std::vector<std::size_t>& dims, bool inverse);
// The same transform along one axis only.
void fft_axis_inplace(cvec& data, const std::vector<std::size_t>& dims, std::size_t axis, bool inverse);

// Apply m(n) (or m(n0, n1)) to the spectrum of f and transform back.
GridFunction spectral_multiply(const GridFunction& f, const std::function<cplx(long)>& m);
GridFunction spectral_multiply(const GridFunction& f, const std::function<cplx(long, long)>& m);

}  // namespace lpk
