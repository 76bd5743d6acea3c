#include "lpk/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/plateau.hpp"

namespace lpk {

namespace {

GridFunction rotate(const GridFunction& g, long s) {
  const long N = static_cast<long>(g.size());
  GridFunction out = g;
  for (long i = 0; i < N; ++i) out[static_cast<std::size_t>(((i + s) % N + N) % N)] = g[static_cast<std::size_t>(i)];
  return out;
}

// Signed torus offset of x from c, in [-1/2, 1/2).
double offset(double x, double c) { return wrap_unit(x - c + 0.5) - 0.5; }

ScaleSet from_spatial(int L, std::vector<GridFunction> spatial) {
  ScaleSet s;
  s.L = L;
  s.K = static_cast<int>(spatial.size());
  for (auto& g : spatial) s.spectra.push_back(fourier_coefficients(g));
  s.spatial = std::move(spatial);
  return s;
}

double lb_alpha_hat(double x) {
  static const Plateau p(-1.0, -0.5, 0.5, 1.0);
  return p(x);
}

// Real-line transform of lb_alpha_hat, by the trapezoid rule on its support.
double lb_alpha(double x) {
  constexpr int Q = 4096;
  double s = 0.0;
  for (int q = 0; q < Q; ++q) {
    double xi = -1.0 + 2.0 * q / Q;
    s += lb_alpha_hat(xi) * std::cos(2 * M_PI * x * xi);
  }
  return s * 2.0 / Q;
}

int choose_k0(double s) {
  for (int k0 = 0; k0 <= 12; ++k0) {
    double r = std::ldexp(1.0, -k0), worst = 0.0;
    for (int q = 0; q <= 64; ++q) worst = std::max(worst, std::fabs(lb_alpha(r * q / 64) - s));
    if (worst < s / 4) return k0;
  }
  throw ConstructionError("no admissible k0 for the lower-bounded family");
}

double level_floor(const GridFunction& proto, int k) {
  const std::size_t n = proto.size() >> k;
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, std::ldexp(std::abs(proto[i]), -k));
  return m;
}

// 2^k (f - (∫f) g): f = 1 on [0, 2^-k] with smooth shoulders, g a unit-mass bump
// on the far side of the torus. Equal to 2^k on [0, 2^-k) and of mean zero.
GridFunction coarse_lower_bounded(int k, int L) {
  const double len = std::ldexp(1.0, -k), w = len / 4;
  const Plateau f(-w, 0.0, len, len + w);
  const double g0 = len + w, g1 = 1.0 - w, gw = (g1 - g0) / 4;
  const Plateau g(g0, g0 + gw, g1 - gw, g1);
  GridFunction fv = GridFunction::sample(L, [&](double x) { return f(x < 1.0 - w ? x : x - 1.0); });
  GridFunction gv = GridFunction::sample(L, [&](double x) { return g(x); });
  const cplx fm = fv.mean(), gm = gv.mean();
  GridFunction out = fv - gv * (fm / gm);
  return out * std::ldexp(1.0, k);
}

AdaptedFamily lower_bounded_family(int K, int L) {
  const double s = lb_alpha(0.0);
  const double c = s / 8;
  for (int k0 = choose_k0(s); k0 <= 12; ++k0) {
    const double scale = std::ldexp(1.0, k0);
    ScaleSet spec = scale_set_from_symbol(K, L, [&](int k, double t) {
      double u = std::ldexp(t, k0 - k);
      return scale * (lb_alpha_hat(u) - lb_alpha_hat(2 * u));
    });
    std::vector<GridFunction> protos;
    double a = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K; ++k) {
      GridFunction p = spec.at(k);
      if (level_floor(p, k) < c / 2) p = coarse_lower_bounded(k, L);
      a = std::min(a, level_floor(p, k));
      protos.push_back(std::move(p));
    }
    if (a > 0.0) {
      AdaptedFamily fam(FamilyKind::lower_bounded, from_spatial(L, std::move(protos)), true);
      fam.set_floor(a, k0);
      return fam;
    }
  }
  throw ConstructionError("lower-bounded family has a vanishing floor");
}

}  // namespace

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::from_pou_1: return "from_pou_1";
    case FamilyKind::from_pou_2: return "from_pou_2";
    case FamilyKind::lower_bounded: return "lower_bounded";
    case FamilyKind::low_pass: return "low_pass";
    case FamilyKind::custom: return "custom";
  }
  return "?";
}

FamilyKind parse_family(const std::string& name) {
  for (auto k : {FamilyKind::from_pou_1, FamilyKind::from_pou_2, FamilyKind::lower_bounded, FamilyKind::low_pass})
    if (name == family_name(k)) return k;
  throw ParseError("unknown family '" + name + "'");
}

AdaptedFamily::AdaptedFamily(FamilyKind kind, ScaleSet prototypes, bool zero_mean)
    : kind_(kind), protos_(std::move(prototypes)), zero_mean_(zero_mean) {
  if (zero_mean_)
    for (int k = 1; k <= protos_.K; ++k)
      if (std::abs(protos_.hat(k).at(0)) > 1e-12)
        throw ContractError("family declared zero-mean has a prototype with mean " +
                            std::to_string(std::abs(protos_.hat(k).at(0))));
}

GridFunction AdaptedFamily::member_at(int k, long s) const {
  if (k < 1 || k > scales()) throw LevelError("scale " + std::to_string(k) + " outside the family");
  return rotate(prototype(k), s) * std::ldexp(1.0, -k);
}

GridFunction AdaptedFamily::member(const DyadicInterval& I) const {
  return member_at(I.level, static_cast<long>(I.first_sample(log_size())));
}

GridFunction AdaptedFamily::normalized_member(const DyadicInterval& I) const {
  return member(I) * std::sqrt(std::ldexp(1.0, I.level));
}

GridFunction AdaptedFamily::correlate(const Spectrum& fhat, int k) const {
  if (fhat.log_sizes() != std::vector<int>{log_size()}) throw DimensionError("function and family grids differ");
  Spectrum s = fhat;
  const Spectrum& p = prototype_spectrum(k);
  const double w = std::ldexp(1.0, -k);
  for (std::size_t i = 0; i < size(); ++i) s.coefficients()[i] *= w * std::conj(p.coefficients()[i]);
  return inverse_transform(s);
}

AdaptedFamily AdaptedFamily::translated(long s) const {
  std::vector<GridFunction> p;
  for (int k = 1; k <= scales(); ++k) p.push_back(rotate(prototype(k), s));
  AdaptedFamily fam(FamilyKind::custom, from_spatial(log_size(), std::move(p)), false);
  fam.zero_mean_ = zero_mean_;
  return fam;
}

AdaptedFamily make_adapted_family(FamilyKind kind, int K, int L) {
  AdaptedFamily fam;
  switch (kind) {
    case FamilyKind::from_pou_1: fam = AdaptedFamily(kind, build_pou(K, L).first, true); break;
    case FamilyKind::from_pou_2: fam = AdaptedFamily(kind, build_pou(K, L).second, true); break;
    case FamilyKind::lower_bounded:
      if (K < 1 || K > max_scales(L)) throw LevelError("scale count exceeds L - 3");
      fam = lower_bounded_family(K, L);
      break;
    case FamilyKind::low_pass:
      if (K < 1 || K > max_scales(L)) throw LevelError("scale count exceeds L - 3");
      fam = AdaptedFamily(kind, scale_set_from_symbol(K, L, [](int k, double t) {
                            static const Plateau p(-0.25, -0.125, 0.125, 0.25);
                            return p(std::ldexp(t, -k));
                          }), false);
      break;
    case FamilyKind::custom: throw DomainError("custom families are built from prototypes");
  }
  fam.set_constants(verify_adapted(fam, 6).C);
  return fam;
}

namespace {

double weight_at(std::size_t i, std::size_t N, int k, int m) {
  const double x = static_cast<double>(i) / N, len = std::ldexp(1.0, -k);
  const double d = dist_torus(x, TorusInterval{0.0, len});
  return std::pow(1.0 + d / len, m);
}

}  // namespace

AdaptationReport verify_adapted(const AdaptedFamily& fam, int m_max) {
  if (m_max < 0) throw DomainError("m_max must be nonnegative");
  AdaptationReport r;
  r.C.assign(m_max + 1, 0.0);
  r.C_prime.assign(m_max + 1, 0.0);
  const std::size_t N = fam.size();
  for (int k = 1; k <= fam.scales(); ++k) {
    const GridFunction& p = fam.prototype(k);
    for (std::size_t i = 0; i < N; ++i) {
      const double v = std::ldexp(std::abs(p[i]), -k);
      const double d = std::abs(p[(i + 1) % N] - p[(i + N - 1) % N]) * (N / 2.0) * std::ldexp(1.0, -2 * k);
      for (int m = 0; m <= m_max; ++m) {
        const double w = weight_at(i, N, k, m);
        r.C[m] = std::max(r.C[m], v * w);
        r.C_prime[m] = std::max(r.C_prime[m], d * w);
      }
    }
  }
  for (double c : r.C) r.finite = r.finite && std::isfinite(c) && c < 1e300;
  for (double c : r.C_prime) r.finite = r.finite && std::isfinite(c) && c < 1e300;
  return r;
}

double member_constant(const AdaptedFamily& fam, int k, int m) {
  const std::size_t N = fam.size();
  double best = 0.0;
  for (long j = 0; j < (1L << k); ++j) {
    DyadicInterval I = DyadicInterval::make(k, j);
    TorusInterval T = TorusInterval::of(I);
    GridFunction phi = fam.member(I);
    for (std::size_t i = 0; i < N; ++i) {
      const double d = dist_torus(static_cast<double>(i) / N, T);
      best = std::max(best, std::abs(phi[i]) * std::pow(1.0 + d / T.length, m));
    }
  }
  return best;
}

GridFunction interval_cutoff(const TorusInterval& J, int L) {
  if (J.is_whole()) return GridFunction::constant({L}, 1.0);
  static const Plateau p(-0.5, -0.25, 0.25, 0.5);
  const double c = J.center(), len = J.length;
  return GridFunction::sample(L, [&](double x) { return p(offset(x, c) / len); });
}

std::vector<AdaptedPiece> decompose_adapted(const AdaptedFamily& fam, const DyadicInterval& I, bool preserve_mean) {
  const int L = fam.log_size();
  const int n = I.level;
  if (n > fam.scales()) throw LevelError("interval finer than the family");
  const GridFunction phi = fam.member(I);
  const TorusInterval base = TorusInterval::of(I);
  auto cut = [&](int m) { return interval_cutoff(concentric_scale(base, std::ldexp(1.0, m)), L); };

  std::vector<AdaptedPiece> out;
  GridFunction prev = GridFunction::zeros({L});
  for (int m = 1; m <= n; ++m) {
    GridFunction next = m == n ? GridFunction::constant({L}, 1.0) : cut(m);
    GridFunction window = next - prev;
    AdaptedPiece piece;
    piece.k = m;
    piece.weight = std::ldexp(1.0, -10 * m);
    piece.support = concentric_scale(base, std::ldexp(1.0, m));
    piece.piece = pointwise(phi, window) * std::ldexp(1.0, 10 * m);
    out.push_back(std::move(piece));
    prev = std::move(next);
  }
  if (preserve_mean) {
    GridFunction bump = interval_cutoff(base, L);
    bump *= 1.0 / bump.mean().real();
    for (auto& p : out) p.piece -= bump * p.piece.mean();
  }
  return out;
}

}  // namespace lpk
