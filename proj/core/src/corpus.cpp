#include "lpk/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "lpk/dyadic.hpp"
#include "lpk/errors.hpp"

namespace lpk {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double torus_distance(double x, double x0) {
  const double d = wrap_unit(x - x0);
  return std::min(d, 1.0 - d);
}

double clamp_distance(double d, std::size_t N) { return std::max(d, 0.5 / static_cast<double>(N)); }

cplx trig_polynomial(const std::vector<std::pair<long, cplx>>& terms, double x) {
  cplx s{};
  for (const auto& [n, c] : terms) s += c * std::polar(1.0, 2.0 * std::numbers::pi * n * x);
  return s;
}

std::vector<std::pair<long, cplx>> random_terms(std::mt19937_64& rng, long band) {
  std::normal_distribution<double> gauss;
  std::vector<std::pair<long, cplx>> terms;
  for (long n = -band; n <= band; ++n) {
    const double w = 1.0 / (1.0 + std::abs(static_cast<double>(n)));
    terms.emplace_back(n, cplx(gauss(rng), gauss(rng)) * w);
  }
  return terms;
}

// Union of up to three intervals with endpoints on the 1/64 lattice.
std::vector<std::pair<double, double>> random_intervals(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), start(0, 63), len(1, 16);
  std::vector<std::pair<double, double>> out;
  for (int i = count(rng); i > 0; --i) out.emplace_back(start(rng) / 64.0, len(rng) / 64.0);
  return out;
}

bool in_union(const std::vector<std::pair<double, double>>& ivs, double x) {
  return std::any_of(ivs.begin(), ivs.end(), [&](const auto& iv) { return wrap_unit(x - iv.first) < iv.second; });
}

void build_1d(Corpus& c, int L, std::size_t per) {
  auto stream = [&](std::uint64_t fam, std::size_t i) { return std::mt19937_64(mix_seed(c.seed, fam * 1000003 + i)); };
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(1, i);
    const auto terms = random_terms(rng, 16);
    c.members.push_back({"trig", "trig:" + std::to_string(i),
                         GridFunction::sample(L, [&](double x) { return trig_polynomial(terms, x); })});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(2, i);
    const auto ivs = random_intervals(rng);
    c.members.push_back({"indicator", "indicator:" + std::to_string(i),
                         GridFunction::sample(L, [&](double x) { return in_union(ivs, x) ? 1.0 : 0.0; })});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(3, i);
    std::uniform_int_distribution<int> start(0, 63), width(1, 4);
    std::uniform_real_distribution<double> height(4.0, 64.0);
    const double x0 = start(rng) / 64.0, w = width(rng) / 64.0, h = height(rng);
    c.members.push_back({"spike", fmt("spike:x0=%g,w=%g,h=%g", x0, w, h), spike(L, x0, w, h)});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(4, i);
    std::uniform_real_distribution<double> at(0.0, 1.0), beta(0.2, 0.95);
    const double x0 = at(rng), b = i == 0 ? 0.5 : beta(rng);
    c.members.push_back({"power", fmt("power:x0=%g,beta=%g", x0, b), power_singular(L, x0, b)});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(5, i);
    std::uniform_real_distribution<double> at(0.0, 1.0), s(0.5, 3.0);
    const double x0 = at(rng), e = s(rng);
    c.members.push_back({"log", fmt("log:x0=%g,s=%g", x0, e), log_singular(L, x0, e)});
  }
}

void build_2d(Corpus& c, int L0, int L1, std::size_t per) {
  const std::size_t N0 = std::size_t{1} << L0, N1 = std::size_t{1} << L1;
  const double h = 0.5 / static_cast<double>(std::max(N0, N1));
  auto stream = [&](std::uint64_t fam, std::size_t i) { return std::mt19937_64(mix_seed(c.seed, fam * 1000003 + i)); };
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(11, i);
    const auto tx = random_terms(rng, 8), ty = random_terms(rng, 8);
    std::vector<std::pair<long, cplx>> cross = random_terms(rng, 4);
    c.members.push_back({"trig2", "trig2:" + std::to_string(i), GridFunction::sample(L0, L1, [&](double x, double y) {
                           return trig_polynomial(tx, x) * trig_polynomial(ty, y) + trig_polynomial(cross, x + y);
                         })});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(12, i);
    const auto ix = random_intervals(rng), iy = random_intervals(rng);
    const auto jx = random_intervals(rng), jy = random_intervals(rng);
    c.members.push_back({"rect", "rect:" + std::to_string(i), GridFunction::sample(L0, L1, [&](double x, double y) {
                           return (in_union(ix, x) && in_union(iy, y)) || (in_union(jx, x) && in_union(jy, y)) ? 1.0 : 0.0;
                         })});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(13, i);
    std::uniform_real_distribution<double> at(0.0, 1.0), beta(0.2, 0.9);
    const auto ivs = random_intervals(rng);
    const double x0 = at(rng), b = beta(rng);
    const GridFunction a = power_singular(L0, x0, b);
    const GridFunction d = GridFunction::sample(L1, [&](double y) { return in_union(ivs, y) ? 1.0 : 0.0; });
    c.members.push_back({"tensor", fmt("tensor:power(x0=%g,beta=%g)*indicator", x0, b), tensor(a, d)});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(14, i);
    std::uniform_real_distribution<double> at(0.0, 1.0), beta(0.3, 0.95);
    const double x0 = at(rng), y0 = at(rng), b = beta(rng);
    c.members.push_back({"power2", fmt("power2:x0=%g,y0=%g,beta=%g", x0, y0, b),
                         GridFunction::sample(L0, L1, [&](double x, double y) {
                           const double r = std::max(std::hypot(torus_distance(x, x0), torus_distance(y, y0)), h);
                           return std::pow(r, -b);
                         })});
  }
  for (std::size_t i = 0; i < per; ++i) {
    auto rng = stream(15, i);
    std::uniform_real_distribution<double> at(0.0, 1.0), s(0.5, 2.5);
    const double x0 = at(rng), y0 = at(rng), e = s(rng);
    c.members.push_back({"log2", fmt("log2:x0=%g,y0=%g,s=%g", x0, y0, e),
                         GridFunction::sample(L0, L1, [&](double x, double y) {
                           const double r = std::max(std::hypot(torus_distance(x, x0), torus_distance(y, y0)), h);
                           return std::pow(std::log(1.0 / r), e);
                         })});
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GridFunction power_singular(int L, double x0, double beta) {
  const std::size_t N = std::size_t{1} << L;
  return GridFunction::sample(L, [&](double x) { return std::pow(clamp_distance(torus_distance(x, x0), N), -beta); });
}

GridFunction log_singular(int L, double x0, double s) {
  const std::size_t N = std::size_t{1} << L;
  return GridFunction::sample(
      L, [&](double x) { return std::pow(std::log(1.0 / clamp_distance(torus_distance(x, x0), N)), s); });
}

GridFunction spike(int L, double x0, double width, double height) {
  return GridFunction::sample(L, [&](double x) { return wrap_unit(x - x0) < width - 1e-15 ? height : 0.0; });
}

std::vector<GridFunction> Corpus::functions() const {
  std::vector<GridFunction> out;
  for (const auto& m : members) out.push_back(m.f);
  return out;
}

std::vector<CorpusMember> Corpus::family(const std::string& name) const {
  std::vector<CorpusMember> out;
  for (const auto& m : members)
    if (m.family == name) out.push_back(m);
  return out;
}

Corpus generate_corpus(std::uint64_t seed, std::vector<int> log_sizes, CorpusOptions options) {
  if (log_sizes.empty() || log_sizes.size() > 2) throw DimensionError("corpus grids have one or two axes");
  for (int L : log_sizes)
    if (L < kMinLog || L > kMaxLog) throw DimensionError("corpus grid exponent outside [4, 13]");
  Corpus c;
  c.seed = seed;
  c.log_sizes = log_sizes;
  if (log_sizes.size() == 1)
    build_1d(c, log_sizes[0], options.per_family);
  else
    build_2d(c, log_sizes[0], log_sizes[1], options.per_family);
  if (options.include_constant)
    c.members.push_back({"constant", "constant:1", GridFunction::constant(log_sizes, 1.0)});
  return c;
}

}  // namespace lpk
