#include <gtest/gtest.h>

#include <random>

#include "lpk/adapted.hpp"
#include "lpk/cz.hpp"
#include "lpk/errors.hpp"
#include "lpk/experiments.hpp"
#include "lpk/fourier.hpp"
#include "lpk/maximal.hpp"
#include "lpk/norms.hpp"
#include "oracles.hpp"

using namespace lpk;

namespace {

GridFunction random_real(int L, unsigned seed, double tail = 1.0) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> e(1.0 / tail);
  GridFunction f = GridFunction::zeros({L});
  for (auto& v : f.values()) v = e(rng);
  return f;
}

std::vector<double> real_parts(const GridFunction& f) {
  std::vector<double> r;
  for (auto v : f.values()) r.push_back(v.real());
  return r;
}

void expect_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << i;
}

GridFunction indicator(int L, double a, double b, double h = 1.0) {
  return GridFunction::sample(L, [=](double x) { return x >= a && x < b ? h : 0.0; });
}

}  // namespace

TEST(Maximal, HardyLittlewoodMatchesBruteForce) {
  for (unsigned seed : {1u, 2u, 3u}) {
    const GridFunction f = random_real(6, seed);
    expect_close(real_parts(maximal(f, MaximalKind::hl())), oracle::hl(f.magnitudes()), 1e-12);
    expect_close(hl_line(f.magnitudes()), oracle::hl(f.magnitudes()), 1e-12);
  }
}

TEST(Maximal, DyadicMatchesAncestors) {
  const GridFunction f = random_real(7, 4);
  expect_close(real_parts(maximal(f, MaximalKind::dyadic())), oracle::dyadic(f.magnitudes()), 1e-12);
}

TEST(Maximal, ShiftedMatchesBruteForce) {
  const GridFunction f = random_real(5, 5);
  for (long n : {-2L, 1L, 3L})
    expect_close(real_parts(maximal(f, MaximalKind::shifted(n))), oracle::shifted_hl(f.magnitudes(), n), 1e-12);
}

TEST(Maximal, ShiftedSupDominatesShifted) {
  const GridFunction f = random_real(6, 6);
  const GridFunction a = maximal(f, MaximalKind::shifted(2)), b = maximal(f, MaximalKind::shifted_sup(2));
  for (std::size_t i = 0; i < f.count(); ++i) EXPECT_GE(b[i].real(), a[i].real() - 1e-13);
}

TEST(Maximal, StrongMatchesBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  GridFunction f = GridFunction::zeros({4, 4});
  for (auto& v : f.values()) v = u(rng) * u(rng) * 10;
  expect_close(real_parts(maximal(f, MaximalKind::strong())), oracle::strong(f.magnitudes(), 16, 16), 1e-12);
}

TEST(Maximal, StrongFactorsOnSeparableIndicators) {
  const GridFunction a = indicator(5, 0.25, 0.5), b = indicator(5, 0.0, 0.125);
  const GridFunction s = maximal(tensor(a, b), MaximalKind::strong());
  const GridFunction p = tensor(maximal_pow2(a), maximal_pow2(b));
  EXPECT_LT(max_abs_diff(s, p), 1e-13);
}

TEST(Maximal, DirectionalIsLineMaximal) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  GridFunction f = GridFunction::zeros({4, 5});
  for (auto& v : f.values()) v = u(rng);
  const GridFunction d = maximal(f, MaximalKind::directional(1));
  for (std::size_t i = 0; i < 16; ++i) {
    std::vector<double> row(32);
    for (std::size_t j = 0; j < 32; ++j) row[j] = std::abs(f.at(i, j));
    const auto m = oracle::hl(row);
    for (std::size_t j = 0; j < 32; ++j) EXPECT_NEAR(d.at(i, j).real(), m[j], 1e-12);
  }
  EXPECT_THROW(maximal(f, MaximalKind::hl()), DimensionError);
}

TEST(Maximal, Examples) {
  const GridFunction c = GridFunction::constant({8}, 2.5);
  for (auto kind : {MaximalKind::hl(), MaximalKind::dyadic(), MaximalKind::shifted(1)})
    EXPECT_LT(max_abs_diff(maximal(c, kind), c), 1e-13);
  EXPECT_NEAR(maximal(indicator(10, 0, 0.5), MaximalKind::hl())[768].real(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(maximal(indicator(10, 0, 0.25), MaximalKind::dyadic())[384].real(), 0.5, 1e-15);
}

TEST(Maximal, PointwiseChainAndSublinearity) {
  const GridFunction f = random_real(8, 9, 3.0), g = random_real(8, 10);
  const GridFunction Mf = maximal(f, MaximalKind::hl()), MDf = maximal(f, MaximalKind::dyadic());
  const GridFunction Mg = maximal(g, MaximalKind::hl()), Mfg = maximal(f + g, MaximalKind::hl());
  const GridFunction M3f = maximal(f * cplx(0, -3), MaximalKind::hl());
  for (std::size_t i = 0; i < f.count(); ++i) {
    EXPECT_LE(std::abs(f[i]), MDf[i].real() + 1e-12);
    EXPECT_LE(MDf[i].real(), Mf[i].real() + 1e-12);
    EXPECT_LE(Mfg[i].real(), Mf[i].real() + Mg[i].real() + 1e-12);
    EXPECT_NEAR(M3f[i].real(), 3 * Mf[i].real(), 1e-12);
  }
}

TEST(Maximal, WeakTypeBound) {
  for (unsigned seed = 11; seed < 16; ++seed) {
    const GridFunction f = random_real(9, seed, 2.0);
    EXPECT_LE(norm(maximal(f, MaximalKind::hl()), NormSpec::weak(1)), 3.0 * norm(f, NormSpec::lp(1)));
  }
}

TEST(Maximal, AdaptedMaximal) {
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_1, 5, 8);
  const GridFunction one = GridFunction::constant({8}, 1.0);
  EXPECT_LT(max_abs(adapted_maximal(one, fam)), 1e-12);
  const GridFunction f = random_real(8, 17);
  const GridFunction a = adapted_maximal(f, fam), b = adapted_maximal(f * 2.0, fam), M = maximal(f, MaximalKind::hl());
  EXPECT_LT(max_abs_diff(b, a * 2.0), 1e-12);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.count(); ++i) worst = std::max(worst, a[i].real() / M[i].real());
  EXPECT_LT(worst, 10.0);
  // Direct formula at one point: sup over dyadic I ∋ x of |⟨f, φ_I⟩| / |I|.
  const std::size_t x = 77;
  double ref = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const DyadicInterval I = DyadicInterval::make(k, static_cast<long>(x >> (8 - k)));
    ref = std::max(ref, std::abs(inner_product(f, fam.member(I))) / I.length());
  }
  EXPECT_NEAR(a[x].real(), ref, 1e-12);
}

TEST(Maximal, VectorValued) {
  const GridFunction f = random_real(7, 18), g = random_real(7, 19);
  const auto kind = MaximalKind::hl();
  EXPECT_LT(max_abs_diff(vector_maximal({f}, 2.0, kind), maximal(f, kind)), 1e-13);
  const GridFunction sup = vector_maximal({f, g}, std::numeric_limits<double>::infinity(), kind);
  GridFunction pm = GridFunction::zeros({7});
  for (std::size_t i = 0; i < pm.count(); ++i) pm[i] = std::max(std::abs(f[i]), std::abs(g[i]));
  const GridFunction Mpm = maximal(pm, kind);
  for (std::size_t i = 0; i < pm.count(); ++i) EXPECT_LE(sup[i].real(), Mpm[i].real() + 1e-13);
  EXPECT_THROW(vector_maximal({}, 2.0, kind), Error);
}

TEST(Counterexamples, SumOfIndicatorsGrowsLogarithmically) {
  const auto r = fs_sum_counterexample(10, 64);
  EXPECT_GE(r.value, std::log(64.0) - 1);
  EXPECT_TRUE(r.pass());
  const auto g = fs_growth_counterexample(12, 8, 2.0);
  EXPECT_GE(g.value, std::sqrt(8.0) / 2);
}

TEST(CalderonZygmund, EightOnAnEighth) {
  const GridFunction f = indicator(8, 0, 0.125, 8.0);
  const CZDecomposition d = cz_decompose(f, 3.0);
  ASSERT_EQ(d.intervals.size(), 1u);
  EXPECT_EQ(d.intervals[0], DyadicInterval::make(2, 0));
  EXPECT_LT(max_abs_diff(d.good, indicator(8, 0, 0.25, 4.0)), 1e-13);
  ASSERT_EQ(d.bad.size(), 1u);
  EXPECT_LT(std::abs(d.bad[0].b.mean()), 1e-13);
  EXPECT_NEAR(norm(d.bad[0].b, NormSpec::lp(1)), 1.0, 1e-13);
  EXPECT_LT(max_abs_diff(d.bad[0].b, f - indicator(8, 0, 0.25, 4.0)), 1e-13);
  EXPECT_TRUE(check_cz(f, d).ok());
}

TEST(CalderonZygmund, ConstantOnItsInterval) {
  const GridFunction f = indicator(8, 0, 0.25, 4.0);
  const CZDecomposition d = cz_decompose(f, 2.0);
  ASSERT_EQ(d.intervals.size(), 1u);
  EXPECT_EQ(d.intervals[0], DyadicInterval::make(2, 0));
  EXPECT_LT(max_abs(d.bad[0].b), 1e-13);
  EXPECT_LT(max_abs_diff(d.good, f), 1e-13);
}

TEST(CalderonZygmund, SmallFunctionsAreGood) {
  const GridFunction f = random_real(8, 20, 0.1);
  const double a = max_abs(f) + 1.0;
  const CZDecomposition d = cz_decompose(f, a);
  EXPECT_TRUE(d.intervals.empty());
  EXPECT_LT(max_abs_diff(d.good, f), 1e-15);
  EXPECT_THROW(cz_decompose(f, norm(f, NormSpec::lp(1)) * 0.5), ThresholdError);
}

TEST(CalderonZygmund, RandomInvariants) {
  for (unsigned seed = 21; seed < 26; ++seed) {
    const GridFunction f = random_real(10, seed, 1.0) + indicator(10, 0.3, 0.31, 40.0);
    const double alpha = 4.0 * norm(f, NormSpec::lp(1));
    const CZCheck c = check_cz(f, cz_decompose(f, alpha));
    EXPECT_TRUE(c.ok());
    EXPECT_LE(c.measure, c.measure_bound);
    EXPECT_LE(c.good_l2sq, c.good_bound);
    EXPECT_LE(c.worst_bad_ratio, 1.0);
  }
}

TEST(StoppingCover, Examples) {
  EXPECT_TRUE(cz_cover(GridFunction::zeros({6}), 1.0).intervals.empty());
  const GridFunction f = indicator(8, 0, 0.25, 4.0);
  // Dyadic averages above 3/4: [0,1/2) (mean 2) is the maximal one.
  const StoppingCover c = cz_cover(f, 3.0);
  ASSERT_EQ(c.intervals.size(), 1u);
  EXPECT_EQ(c.intervals[0], DyadicInterval::make(1, 0));
  EXPECT_TRUE(c.average_ok);
  EXPECT_TRUE(c.cover_ok);
  EXPECT_TRUE(cz_cover(f, 16.0).intervals.empty());
}
