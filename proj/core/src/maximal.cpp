#include "lpk/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"

namespace lpk {

namespace {

// out[x] = max of v over the circular window [x - w + 1, x], 1 <= w <= N.
std::vector<double> trailing_max(const std::vector<double>& v, std::size_t w) {
  const std::size_t N = v.size();
  std::vector<double> out(N);
  if (w >= N) {
    std::fill(out.begin(), out.end(), *std::max_element(v.begin(), v.end()));
    return out;
  }
  std::deque<std::size_t> q;
  for (std::size_t t = 0; t < N + w - 1; ++t) {
    const double val = v[t % N];
    while (!q.empty() && v[q.back() % N] <= val) q.pop_back();
    q.push_back(t);
    if (q.front() + w <= t) q.pop_front();
    if (t + 1 >= w) out[(t + 1 - w) % N] = v[q.front() % N];
  }
  // out[s] above holds the max over [s, s + w - 1]; re-index to trailing windows.
  std::vector<double> trail(N);
  for (std::size_t x = 0; x < N; ++x) trail[x] = out[(x + N - (w - 1)) % N];
  return trail;
}

struct Line {
  std::vector<double> prefix;  // over the doubled line
  std::size_t N;
  explicit Line(const std::vector<double>& a) : prefix(2 * a.size() + 1, 0.0), N(a.size()) {
    for (std::size_t i = 0; i < 2 * N; ++i) prefix[i + 1] = prefix[i] + a[i % N];
  }
  double avg(std::size_t s, std::size_t len) const {
    s %= N;
    return (prefix[s + len] - prefix[s]) / static_cast<double>(len);
  }
};

std::size_t wrap_index(long v, std::size_t N) {
  long M = static_cast<long>(N);
  return static_cast<std::size_t>(((v % M) + M) % M);
}

// sup over intervals I containing x of the average over I + (n + r/len)|I|,
// r ranging over [0, rmax(len)].
std::vector<double> interval_sup(const std::vector<double>& a, long n, bool sup_alpha, bool pow2_only) {
  const std::size_t N = a.size();
  Line line(a);
  std::vector<double> best(N, 0.0);
  std::vector<double> A(N), B(N);
  for (std::size_t len = 1; len <= N; pow2_only ? len <<= 1 : ++len) {
    for (std::size_t s = 0; s < N; ++s) A[s] = line.avg(s, len);
    const long off = n * static_cast<long>(len);
    if (sup_alpha && len < N) {
      // max over r in [0, len] of A at start + off + r.
      std::vector<double> lead = trailing_max(A, len + 1 > N ? N : len + 1);
      for (std::size_t s = 0; s < N; ++s) B[s] = lead[wrap_index(static_cast<long>(s) + off + static_cast<long>(len), N)];
    } else {
      for (std::size_t s = 0; s < N; ++s) B[s] = A[wrap_index(static_cast<long>(s) + off, N)];
    }
    std::vector<double> C = trailing_max(B, len);
    for (std::size_t x = 0; x < N; ++x) best[x] = std::max(best[x], C[x]);
  }
  return best;
}

std::vector<double> dyadic_sup(const std::vector<double>& a, int L) {
  const std::size_t N = a.size();
  Line line(a);
  std::vector<double> best(N, 0.0);
  for (int k = 1; k <= L; ++k) {
    const std::size_t len = N >> k;
    for (std::size_t s = 0; s < N; s += len) {
      const double v = line.avg(s, len);
      for (std::size_t x = s; x < s + len; ++x) best[x] = std::max(best[x], v);
    }
  }
  return best;
}

GridFunction from_real(const std::vector<int>& shape, const std::vector<double>& v) {
  cvec c(v.begin(), v.end());
  return GridFunction(shape, std::move(c));
}

void require_dims(const GridFunction& f, int d, const char* what) {
  if (f.dims() != d) throw DimensionError(std::string(what) + " expects a " + std::to_string(d) + "D function");
}

GridFunction strong_maximal(const GridFunction& f) {
  const std::size_t N0 = f.size(0), N1 = f.size(1);
  const auto mags = f.magnitudes();
  // Doubled 2D prefix sums.
  const std::size_t W = 2 * N1 + 1;
  std::vector<double> P((2 * N0 + 1) * W, 0.0);
  for (std::size_t i = 0; i < 2 * N0; ++i)
    for (std::size_t j = 0; j < 2 * N1; ++j)
      P[(i + 1) * W + j + 1] = mags[(i % N0) * N1 + (j % N1)] + P[i * W + j + 1] + P[(i + 1) * W + j] - P[i * W + j];
  std::vector<double> best(N0 * N1, 0.0), A(N0 * N1), row, col;
  for (std::size_t h = 1; h <= N0; h <<= 1)
    for (std::size_t w = 1; w <= N1; w <<= 1) {
      const double area = static_cast<double>(h * w);
      for (std::size_t i = 0; i < N0; ++i)
        for (std::size_t j = 0; j < N1; ++j)
          A[i * N1 + j] = (P[(i + h) * W + j + w] - P[i * W + j + w] - P[(i + h) * W + j] + P[i * W + j]) / area;
      row.resize(N1);
      for (std::size_t i = 0; i < N0; ++i) {
        std::copy(A.begin() + i * N1, A.begin() + (i + 1) * N1, row.begin());
        auto t = trailing_max(row, w);
        std::copy(t.begin(), t.end(), A.begin() + i * N1);
      }
      col.resize(N0);
      for (std::size_t j = 0; j < N1; ++j) {
        for (std::size_t i = 0; i < N0; ++i) col[i] = A[i * N1 + j];
        auto t = trailing_max(col, h);
        for (std::size_t i = 0; i < N0; ++i) best[i * N1 + j] = std::max(best[i * N1 + j], t[i]);
      }
    }
  return from_real(f.log_sizes(), best);
}

GridFunction directional_maximal(const GridFunction& f, int axis) {
  if (axis != 0 && axis != 1) throw DimensionError("directional axis must be 0 or 1");
  const std::size_t N0 = f.size(0), N1 = f.size(1);
  const auto mags = f.magnitudes();
  std::vector<double> out(N0 * N1);
  if (axis == 1) {
    for (std::size_t i = 0; i < N0; ++i) {
      std::vector<double> line(mags.begin() + i * N1, mags.begin() + (i + 1) * N1);
      auto m = interval_sup(line, 0, false, false);
      std::copy(m.begin(), m.end(), out.begin() + i * N1);
    }
  } else {
    std::vector<double> line(N0);
    for (std::size_t j = 0; j < N1; ++j) {
      for (std::size_t i = 0; i < N0; ++i) line[i] = mags[i * N1 + j];
      auto m = interval_sup(line, 0, false, false);
      for (std::size_t i = 0; i < N0; ++i) out[i * N1 + j] = m[i];
    }
  }
  return from_real(f.log_sizes(), out);
}

}  // namespace

MaximalKind MaximalKind::parse(const std::string& text) {
  try {
    if (text == "hl") return hl();
    if (text == "dyadic") return dyadic();
    if (text == "strong") return strong();
    if (text.rfind("shifted:", 0) == 0) return shifted(std::stol(text.substr(8)));
    if (text.rfind("sup:", 0) == 0) return shifted_sup(std::stol(text.substr(4)));
    if (text.rfind("dir:", 0) == 0) return directional(std::stoi(text.substr(4)));
  } catch (const std::logic_error&) {
  }
  throw ParseError("unknown maximal kind '" + text + "'");
}

std::string MaximalKind::label() const {
  switch (tag) {
    case Tag::hl: return "hl";
    case Tag::dyadic: return "dyadic";
    case Tag::shifted: return "shifted:" + std::to_string(n);
    case Tag::shifted_sup: return "sup:" + std::to_string(n);
    case Tag::strong: return "strong";
    case Tag::directional: return "dir:" + std::to_string(axis);
  }
  return "?";
}

GridFunction maximal(const GridFunction& f, const MaximalKind& kind) {
  switch (kind.tag) {
    case MaximalKind::Tag::hl:
      require_dims(f, 1, "hl maximal");
      return from_real(f.log_sizes(), interval_sup(f.magnitudes(), 0, false, false));
    case MaximalKind::Tag::dyadic:
      require_dims(f, 1, "dyadic maximal");
      return from_real(f.log_sizes(), dyadic_sup(f.magnitudes(), f.log_sizes()[0]));
    case MaximalKind::Tag::shifted:
      require_dims(f, 1, "shifted maximal");
      return from_real(f.log_sizes(), interval_sup(f.magnitudes(), kind.n, false, false));
    case MaximalKind::Tag::shifted_sup:
      require_dims(f, 1, "shifted maximal");
      return from_real(f.log_sizes(), interval_sup(f.magnitudes(), kind.n, true, false));
    case MaximalKind::Tag::strong:
      require_dims(f, 2, "strong maximal");
      return strong_maximal(f);
    case MaximalKind::Tag::directional:
      require_dims(f, 2, "directional maximal");
      return directional_maximal(f, kind.axis);
  }
  return f;
}

std::vector<double> hl_line(const std::vector<double>& mags) { return interval_sup(mags, 0, false, false); }

GridFunction maximal_pow2(const GridFunction& f) {
  require_dims(f, 1, "power-of-two maximal");
  return from_real(f.log_sizes(), interval_sup(f.magnitudes(), 0, false, true));
}

GridFunction adapted_maximal(const GridFunction& f, const AdaptedFamily& fam) {
  require_dims(f, 1, "adapted maximal");
  const Spectrum fhat = fourier_coefficients(f);
  const std::size_t N = f.size();
  std::vector<double> best(N, 0.0);
  for (int k = 1; k <= fam.scales(); ++k) {
    const GridFunction c = fam.correlate(fhat, k);
    const std::size_t len = N >> k;
    const double scale = std::ldexp(1.0, k);
    for (std::size_t s = 0; s < N; s += len) {
      const double v = std::abs(c[s]) * scale;
      for (std::size_t x = s; x < s + len; ++x) best[x] = std::max(best[x], v);
    }
  }
  return from_real(f.log_sizes(), best);
}

GridFunction vector_maximal(const std::vector<GridFunction>& fs, double r, const MaximalKind& kind) {
  if (fs.empty()) throw DomainError("vector maximal needs at least one function");
  if (!(r >= 1.0)) throw DomainError("vector maximal exponent must be at least 1");
  std::vector<double> acc(fs.front().count(), 0.0);
  const bool sup = std::isinf(r);
  for (const auto& f : fs) {
    if (!f.same_shape(fs.front())) throw DimensionError("vector maximal inputs differ in shape");
    const GridFunction m = maximal(f, kind);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const double v = m[i].real();
      acc[i] = sup ? std::max(acc[i], v) : acc[i] + (r == 1.0 ? v : std::pow(v, r));
    }
  }
  if (!sup && r != 1.0)
    for (auto& v : acc) v = std::pow(v, 1.0 / r);
  return from_real(fs.front().log_sizes(), acc);
}

}  // namespace lpk
