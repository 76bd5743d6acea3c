#include <gtest/gtest.h>

#include <random>

#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/multiplier.hpp"
#include "lpk/symbol.hpp"
#include "oracles.hpp"

using namespace lpk;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction mode(int L, long n) {
  return GridFunction::sample(L, [n](double x) { return std::polar(1.0, kTwoPi * n * x); });
}

// Random trigonometric polynomial with frequencies |n| < band.
GridFunction band_limited(int L, long band, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<std::pair<long, cplx>> terms;
  for (long n = -band + 1; n < band; ++n) terms.emplace_back(n, cplx(g(rng), g(rng)));
  return GridFunction::sample(L, [&](double x) {
    cplx s{};
    for (auto [n, c] : terms) s += c * std::polar(1.0, kTwoPi * n * x);
    return s;
  });
}

// Σ_{s,t} m(s,t) f̂(s) ĝ(t) e((s+t)x) from direct transforms.
GridFunction direct_bilinear(const MultiplierSymbol& m, const GridFunction& f, const GridFunction& g) {
  const std::size_t N = f.size();
  const cvec fh = oracle::dft(f.values()), gh = oracle::dft(g.values());
  GridFunction out = GridFunction::zeros(f.log_sizes());
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (std::abs(fh[i]) < 1e-12 || std::abs(gh[j]) < 1e-12) continue;
      const long s = frequency_of(i, N), t = frequency_of(j, N);
      const cplx w = m(static_cast<double>(s), static_cast<double>(t)) * fh[i] * gh[j];
      for (std::size_t x = 0; x < N; ++x) out[x] += w * std::polar(1.0, kTwoPi * static_cast<double>(s + t) * x / N);
    }
  return out;
}

}  // namespace

TEST(Multiplier, OneSlotExamples) {
  const GridFunction f = band_limited(7, 30, 1);
  EXPECT_LT(max_abs_diff(apply_1d(make_symbol("constant"), f), f), 1e-10);
  const GridFunction c = GridFunction::sample(7, [](double x) { return std::cos(kTwoPi * x); });
  const GridFunction s = GridFunction::sample(7, [](double x) { return std::sin(kTwoPi * x); });
  EXPECT_LT(max_abs_diff(apply_1d(make_symbol("hilbert"), c), s), 1e-13);
  EXPECT_LT(max_abs_diff(apply_1d(make_symbol("mean_remover"), f), f - GridFunction::constant({7}, f.mean())), 1e-12);
  const MultiplierSymbol osc = oscillatory_symbol(2.0);
  EXPECT_LT(max_abs_diff(apply_1d(osc, mode(7, 5)), mode(7, 5) * std::polar(1.0, 2.0 * std::log(5.0))), 1e-12);
  EXPECT_THROW(apply_1d(make_symbol("cm_ratio"), f), Error);
}

TEST(Multiplier, OneSlotIsLinear) {
  const MultiplierSymbol m = make_symbol("oscillatory");
  const GridFunction f = band_limited(8, 60, 2), g = band_limited(8, 60, 3);
  const cplx a(0.3, -2.0);
  EXPECT_LT(max_abs_diff(apply_1d(m, f * a + g), apply_1d(m, f) * a + apply_1d(m, g)), 1e-12);
}

TEST(Multiplier, MeanSplitReassembles) {
  const MultiplierSymbol m = make_symbol("constant");
  const GridFunction f = band_limited(6, 10, 4);
  const MeanSplit part = split_mean(m, f);
  EXPECT_LT(std::abs(part.zero_part.mean()), 1e-13);
  EXPECT_LT(max_abs_diff(part.zero_part + GridFunction::constant({6}, part.mean_term), f), 1e-12);
}

TEST(Bilinear, Examples) {
  const GridFunction f = band_limited(7, 32, 5), g = band_limited(7, 32, 6);
  EXPECT_LT(max_abs_diff(apply_bilinear(make_symbol("bilinear_constant"), f, g), pointwise(f, g)), 1e-10);
  const GridFunction e1 = mode(7, 1);
  EXPECT_LT(max_abs_diff(apply_bilinear(make_symbol("cm_ratio"), e1, e1), mode(7, 2) * 0.5), 1e-13);
}

TEST(Bilinear, MatchesDirectLatticeSum) {
  const GridFunction f = band_limited(6, 16, 7), g = band_limited(6, 16, 8);
  for (const char* name : {"cm_ratio", "cm_product"}) {
    const MultiplierSymbol m = make_symbol(name);
    EXPECT_LT(max_abs_diff(apply_bilinear(m, f, g), direct_bilinear(m, f, g)), 1e-11) << name;
  }
}

TEST(Bilinear, LinearInEachSlotAndGuarded) {
  const MultiplierSymbol m = make_symbol("cm_product");
  const GridFunction f = band_limited(7, 32, 9), g = band_limited(7, 32, 10), h = band_limited(7, 32, 11);
  const cplx a(1.5, 0.5);
  EXPECT_LT(max_abs_diff(apply_bilinear(m, f * a + h, g), apply_bilinear(m, f, g) * a + apply_bilinear(m, h, g)), 1e-11);
  EXPECT_LT(max_abs_diff(apply_bilinear(m, f, g * a + h), apply_bilinear(m, f, g) * a + apply_bilinear(m, f, h)), 1e-11);
  EXPECT_THROW(apply_bilinear(m, mode(7, 40), g), BandError);
}

TEST(Bilinear, MeanSplit) {
  const MultiplierSymbol m = make_symbol("bilinear_constant");
  const GridFunction f = band_limited(6, 8, 12), g = band_limited(6, 8, 13);
  const MeanSplit part = split_mean(m, f, g);
  EXPECT_LT(max_abs_diff(part.zero_part + GridFunction::constant({6}, part.mean_term), pointwise(f, g)), 1e-12);
}

TEST(Biparameter, ConstantAndFactorization) {
  const GridFunction f1 = band_limited(6, 8, 14), f2 = band_limited(5, 6, 15);
  const GridFunction g1 = band_limited(6, 8, 16), g2 = band_limited(5, 6, 17);
  const GridFunction F = tensor(f1, f2), G = tensor(g1, g2);
  EXPECT_LT(max_abs_diff(apply_biparameter(make_symbol("bp_constant"), F, G), pointwise(F, G)), 1e-10);
  const MultiplierSymbol a = make_symbol("cm_ratio"), b = make_symbol("cm_product");
  const GridFunction lhs = apply_biparameter(product_symbol(a, b), F, G);
  EXPECT_LT(max_abs_diff(lhs, tensor(apply_bilinear(a, f1, g1), apply_bilinear(b, f2, g2))), 1e-11);
  EXPECT_LT(max_abs_diff(apply_biparameter(make_symbol("bp_mixed"), F, G), lhs), 1e-15);
}

TEST(Biparameter, SingleModes) {
  const GridFunction f = GridFunction::sample(5, 5, [](double x, double y) { return std::polar(1.0, kTwoPi * (2 * x - y)); });
  const GridFunction g = GridFunction::sample(5, 5, [](double x, double y) { return std::polar(1.0, kTwoPi * (x + 3 * y)); });
  const MultiplierSymbol m = make_symbol("bp_ratio");
  const cplx v = m(2.0, -1.0, 1.0, 3.0);
  EXPECT_LT(max_abs_diff(apply_biparameter(m, f, g), pointwise(f, g) * v), 1e-13);
}

TEST(Biparameter, PlaneSplitReassembles) {
  const GridFunction F = tensor(band_limited(5, 6, 18), band_limited(5, 6, 19));
  const GridFunction G = tensor(band_limited(5, 6, 20), band_limited(5, 6, 21)) + GridFunction::constant({5, 5}, 2.0);
  for (const char* name : {"bp_constant", "bp_mixed"}) {
    const MultiplierSymbol m = make_symbol(name);
    EXPECT_LT(max_abs_diff(split_planes(m, F, G).assemble(), apply_biparameter(m, F, G)), 1e-11) << name;
  }
}

TEST(Symbols, ValidationExamples) {
  const SymbolValidation one = validate_symbol(make_symbol("constant"), 32);
  EXPECT_TRUE(one.pass);
  for (std::size_t l = 1; l < one.constants.size(); ++l) EXPECT_EQ(one.constants[l], 0.0);
  const SymbolValidation h = validate_symbol(make_symbol("hilbert"), 32);
  EXPECT_TRUE(h.pass);
  for (std::size_t l = 1; l < h.constants.size(); ++l) EXPECT_EQ(h.constants[l], 0.0);
  const SymbolValidation a = validate_symbol(make_symbol("oscillatory"), 32), b = validate_symbol(make_symbol("oscillatory"), 64);
  for (std::size_t l = 0; l < a.constants.size(); ++l) EXPECT_NEAR(b.constants[l], a.constants[l], 0.25 * a.constants[l] + 1e-12);
  EXPECT_THROW(validate_symbol(make_symbol("constant"), 8), DomainError);
}

TEST(Symbols, RegistryPassesValidation) {
  for (const auto& name : symbol_names()) {
    const MultiplierSymbol m = make_symbol(name);
    EXPECT_TRUE(validate_symbol(m, m.parameters() == 2 ? 16 : 32).pass) << name;
  }
  EXPECT_THROW(make_symbol("nope"), ParseError);
  const MultiplierSymbol wobble("wobble", SymbolClass::marcinkiewicz, [](std::span<const double> x) {
    return std::polar(1.0, 3.0 * x[0]);
  });
  EXPECT_FALSE(validate_symbol(wobble, 64).pass);
}

TEST(Coefficients, ConstantSymbolMass) {
  static const oracle::Legendre gl(40);
  const double edges[] = {1.0 / 32, 1.0 / 16, 0.25, 0.5};
  double mass = 0.0;
  for (int i = 0; i < 3; ++i)
    mass += 2.0 * gl.integrate(
                      [](double u) {
                        const double v[] = {u};
                        return coefficient_cutoff(1, 0, 0, v);
                      },
                      edges[i], edges[i + 1]);
  for (int k : {3, 5, 7}) {
    const SymbolCoefficients c = symbol_coefficients(make_symbol("constant"), k);
    const long zero[] = {0};
    EXPECT_NEAR(c.at(zero).real(), mass, 1e-9) << k;
    EXPECT_NEAR(c.at(zero).imag(), 0.0, 1e-12);
  }
}

TEST(Coefficients, ReassemblyAndDecay) {
  double lo = 1e300, hi = 0.0;
  for (int k = 3; k <= 8; ++k) {
    const MultiplierSymbol m = make_symbol("hilbert");
    const SymbolCoefficients c = symbol_coefficients(m, k);
    EXPECT_LE(reassembly_residual(m, c), 1e-6);
    const double d = c.decay_constant(4.0);
    EXPECT_TRUE(std::isfinite(d));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  EXPECT_LT(hi / lo, 1.05);
  const MultiplierSymbol r = make_symbol("cm_ratio");
  for (int block = 1; block <= 3; ++block) EXPECT_LE(reassembly_residual(r, symbol_coefficients(r, block, 4)), 1e-6);
}

TEST(Coefficients, ReassembleAtAPoint) {
  const MultiplierSymbol m = make_symbol("oscillatory");
  const SymbolCoefficients c = symbol_coefficients(m, 6);
  for (double x : {5.0, 7.5, -10.25}) {
    const double pt[] = {x};
    EXPECT_NEAR(std::abs(c.reassemble(pt) - m(x)), 0.0, 1e-6) << x;
  }
}

TEST(Pairing, Examples) {
  const PairingCheck a = trilinear_pairing_check(mode(6, 1), mode(6, 1), mode(6, -2));
  EXPECT_NEAR(std::abs(a.lattice_sum - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(a.integral - 1.0), 0.0, 1e-13);
  const GridFunction f = band_limited(7, 32, 22), g = band_limited(7, 32, 23), h = band_limited(7, 64, 24);
  EXPECT_LE(trilinear_pairing_check(f, g, h).gap, 1e-10);
  const PairingCheck p = trilinear_pairing_check(f, g, GridFunction::constant({7}, 1.0));
  EXPECT_NEAR(std::abs(p.integral - inner_product(f, g.conj())), 0.0, 1e-12);
}
