#include "lpk/square.hpp"

#include <algorithm>
#include <cmath>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"

namespace lpk {

namespace {

long wrap(long s, long N) { return ((s % N) + N) % N; }

}  // namespace

std::vector<long> alpha_shifts(long len, long cap) {
  std::vector<long> r;
  const long stride = len > cap ? len / cap : 1;
  for (long s = 0; s < len; s += stride) r.push_back(s);
  return r;
}

SquareMode SquareMode::parse(const std::string& text) {
  try {
    if (text == "plain") return plain();
    if (text.rfind("shifted:", 0) == 0) return shifted(std::stol(text.substr(8)));
    if (text.rfind("sup:", 0) == 0) return shifted_sup(std::stol(text.substr(4)));
  } catch (const std::logic_error&) {
  }
  throw ParseError("unknown square-function mode '" + text + "'");
}

std::string SquareMode::label() const {
  switch (tag) {
    case Tag::plain: return "plain";
    case Tag::shifted: return "shifted:" + std::to_string(n);
    case Tag::shifted_sup: return "sup:" + std::to_string(n);
  }
  return "?";
}

GridFunction square_function(const GridFunction& f, const AdaptedFamily& fam, SquareMode mode) {
  if (!fam.zero_mean()) throw ContractError("square functions need a zero-mean family");
  if (f.dims() != 1 || f.log_sizes()[0] != fam.log_size()) throw DimensionError("function and family grids differ");
  const Spectrum fhat = fourier_coefficients(f);
  const long N = static_cast<long>(f.size());
  std::vector<double> acc(static_cast<std::size_t>(N), 0.0);
  for (int k = 1; k <= fam.scales(); ++k) {
    const GridFunction corr = normalized_correlation(fhat, fam, k);
    const long len = N >> k;
    const double w = std::ldexp(1.0, k);
    const std::vector<long> shifts = mode.tag == SquareMode::Tag::shifted_sup ? alpha_shifts(len) : std::vector<long>{0};
    const long n = mode.tag == SquareMode::Tag::plain ? 0 : mode.n;
    for (long j = 0; j < (1L << k); ++j) {
      double best = 0.0;
      for (long r : shifts) best = std::max(best, std::norm(corr[static_cast<std::size_t>(wrap((j + n) * len + r, N))]));
      for (long x = j * len; x < (j + 1) * len; ++x) acc[static_cast<std::size_t>(x)] += w * best;
    }
  }
  cvec out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = std::sqrt(acc[i]);
  return GridFunction(f.log_sizes(), std::move(out));
}

GridFunction linearize(const GridFunction& f, const AdaptedFamily& fam1, const AdaptedFamily& fam2,
                       const EpsilonSequence& eps, std::optional<LinearShift> shift) {
  if (!fam1.zero_mean() || !fam2.zero_mean()) throw ContractError("linearization needs zero-mean families");
  if (fam1.log_size() != fam2.log_size() || f.dims() != 1 || f.log_sizes()[0] != fam1.log_size())
    throw DimensionError("family grids do not match the input");
  const int K = std::min({fam1.scales(), fam2.scales(), eps.scales()});
  const Spectrum fhat = fourier_coefficients(f);
  const long N = static_cast<long>(f.size());
  const long n = shift ? shift->n : 0;
  GridFunction out = GridFunction::zeros(f.log_sizes());
  for (int k = 1; k <= K; ++k) {
    const GridFunction corr = normalized_correlation(fhat, fam1, k);
    const long len = N >> k;
    const std::vector<long> shifts = shift && shift->average ? alpha_shifts(len) : std::vector<long>{0};
    const double w = 1.0 / static_cast<double>(shifts.size());
    GridFunction spikes = GridFunction::zeros(f.log_sizes());
    for (long j = 0; j < (1L << k); ++j)
      for (long r : shifts) {
        const long at = j * len + r;
        spikes[static_cast<std::size_t>(at)] =
            w * eps.at(k, j) * corr[static_cast<std::size_t>(wrap(at + n * len, N))];
      }
    out += synthesize(spikes, fam2, k);
  }
  return out;
}

}  // namespace lpk
