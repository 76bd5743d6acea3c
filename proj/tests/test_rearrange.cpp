#include <gtest/gtest.h>

#include <random>

#include "lpk/errors.hpp"
#include "lpk/norms.hpp"
#include "lpk/rearrange.hpp"
#include "oracles.hpp"

using namespace lpk;

namespace {

GridFunction steps(int L, std::vector<std::pair<double, double>> pieces) {
  // pieces: (right end, value), left to right from 0.
  return GridFunction::sample(L, [=](double x) {
    double left = 0.0;
    for (auto [right, v] : pieces) {
      if (x >= left && x < right) return cplx(v);
      left = right;
    }
    return cplx(0.0);
  });
}

GridFunction random_heavy(int L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  GridFunction f = GridFunction::zeros({L});
  for (auto& v : f.values()) v = std::pow(u(rng), -0.6) * (u(rng) < 0.7 ? 1.0 : 0.0);
  return f;
}

}  // namespace

TEST(Rearrangement, TwoStepExample) {
  const GridFunction f = steps(6, {{0.25, 3.0}, {0.5, 0.0}, {0.75, 1.0}});
  const StepProfile p = rearrangement(f);
  EXPECT_EQ(p.breakpoints(), (std::vector<double>{0.0, 0.25, 0.5}));
  EXPECT_EQ(p.values(), (std::vector<double>{3.0, 1.0}));
  EXPECT_EQ(p.at(0.1), 3.0);
  EXPECT_EQ(p.at(0.25), 1.0);
  EXPECT_EQ(p.at(0.6), 0.0);
  EXPECT_EQ(p.support(), 0.5);
  const StepProfile c = rearrangement(GridFunction::constant({5}, 2.0));
  EXPECT_EQ(c.steps(), 1u);
  EXPECT_EQ(c.support(), 1.0);
}

TEST(Rearrangement, EquimeasurableWithInput) {
  const GridFunction f = random_heavy(9, 1);
  const StepProfile p = rearrangement(f);
  for (double q : {1.0, 2.0, 4.0}) EXPECT_NEAR(p.lp_norm(q), norm(f, NormSpec::lp(q)), 1e-12 * norm(f, NormSpec::lp(q)));
  const auto desc = oracle::sorted_desc(f.magnitudes());
  for (std::size_t m = 0; m < desc.size(); m += 37) {
    const double lambda = desc[m];
    std::size_t count = 0;
    for (double v : desc) count += v > lambda;
    EXPECT_DOUBLE_EQ(p.distribution(lambda), static_cast<double>(count) / desc.size());
    EXPECT_DOUBLE_EQ(p.at((m + 0.5) / desc.size()), lambda);
  }
}

TEST(Rearrangement, DoubleStarExamples) {
  const StepProfile p = rearrangement(steps(6, {{0.25, 1.0}}));
  for (double t : {0.01, 0.1, 0.25}) EXPECT_NEAR(p.average(t), 1.0, 1e-15);
  for (double t : {0.3, 0.5, 1.0}) EXPECT_NEAR(p.average(t), 0.25 / t, 1e-15);
  const RearrangementCurve one = n_star(rearrangement(GridFunction::constant({6}, 1.0)), 4, 256);
  for (double v : one.values) EXPECT_NEAR(v, 1.0, 1e-6);
}

TEST(Rearrangement, HigherStarsMatchQuadrature) {
  const GridFunction f = random_heavy(7, 2);
  const StepProfile p = rearrangement(f);
  const auto desc = oracle::sorted_desc(f.magnitudes());
  for (int n : {2, 3, 4})
    for (double t : {1e-3, 0.01, 0.0789, 0.3, 1.0}) {
      const double ref = oracle::n_star(desc, n, t);
      EXPECT_NEAR(n_star_exact(p, n, t), ref, 1e-10 * ref) << n << " " << t;
    }
}

TEST(Rearrangement, StarCurvesIncreaseWithOrder) {
  const StepProfile p = rearrangement(random_heavy(8, 3));
  const RearrangementCurve a = n_star(p, 2, 512), b = n_star(p, 3, 512), c = n_star(p, 4, 512);
  for (std::size_t i = 0; i < a.t.size(); ++i) {
    EXPECT_LE(a.values[i], b.values[i] * (1 + 1e-9));
    EXPECT_LE(b.values[i], c.values[i] * (1 + 1e-9));
    EXPECT_GE(a.values[i], p.at(a.t[i]) * (1 - 1e-12));
  }
}

TEST(Zygmund, Examples) {
  const GridFunction one = GridFunction::constant({8}, 1.0);
  for (int n = 0; n <= 4; ++n) EXPECT_NEAR(zygmund_norm(one, n), 1.0, 1e-12);
  const GridFunction chi = steps(8, {{0.25, 1.0}});
  EXPECT_NEAR(zygmund_norm(chi, 1), 0.25 * (1.0 + std::log(4.0)), 1e-12);
  const GridFunction f = random_heavy(9, 4);
  EXPECT_NEAR(zygmund_norm(f, 0), norm(f, NormSpec::lp(1)), 1e-12);
}

TEST(Zygmund, ClosedFormMatchesQuadrature) {
  for (unsigned seed : {5u, 6u}) {
    const GridFunction f = random_heavy(8, seed);
    const auto desc = oracle::sorted_desc(f.magnitudes());
    for (int n = 1; n <= 3; ++n) {
      const double ref = oracle::zygmund(desc, n);
      EXPECT_NEAR(zygmund_norm(f, n), ref, 1e-10 * ref);
      EXPECT_NEAR(zygmund_norm(f, n, ZygmundMethod::iterated), ref, 1e-6 * ref);
    }
  }
}

TEST(Lorentz, ClosedForms) {
  const GridFunction chi = steps(8, {{0.25, 1.0}});
  for (double p : {1.0, 1.5, 3.0})
    for (double q : {0.5, 1.0, 2.0})
      EXPECT_NEAR(lorentz_norm(chi, p, q), std::pow(p / q, 1.0 / q) * std::pow(0.25, 1.0 / p), 1e-13);
  const GridFunction f = random_heavy(9, 7);
  for (double p : {1.0, 2.0, 3.0}) {
    EXPECT_NEAR(lorentz_norm(f, p, p), norm(f, NormSpec::lp(p)), 1e-12 * norm(f, NormSpec::lp(p)));
    EXPECT_NEAR(lorentz_norm(f, p, std::numeric_limits<double>::infinity()), norm(f, NormSpec::weak(p)), 1e-12);
  }
  EXPECT_THROW(lorentz_norm(f, 0.0, 1.0), DomainError);
}

TEST(Kolmogorov, ExamplesAndSandwich) {
  EXPECT_NEAR(kolmogorov_functional(steps(8, {{0.25, 1.0}}), 2.0, 1.0), 0.5, 1e-14);
  EXPECT_NEAR(kolmogorov_functional(GridFunction::constant({8}, 3.0), 2.0, 1.0), 3.0, 1e-14);
  for (unsigned seed = 8; seed < 12; ++seed) {
    const GridFunction f = random_heavy(9, seed);
    for (auto [p, r] : {std::pair{2.0, 1.0}, std::pair{3.0, 0.5}}) {
      const double weak = norm(f, NormSpec::weak(p)), m = kolmogorov_functional(f, p, r);
      EXPECT_GE(m, weak * (1 - 1e-12));
      EXPECT_LE(m, std::pow(p / (p - r), 1.0 / r) * weak * (1 + 1e-12));
    }
  }
  EXPECT_THROW(kolmogorov_functional(GridFunction::constant({8}, 1.0), 1.0, 2.0), DomainError);
}

TEST(Split, Examples) {
  const GridFunction f = steps(8, {{0.25, 2.0}, {0.5, 1.0}});
  const Split s = optimal_l1_linf_split(f, 0.25);
  EXPECT_LT(max_abs_diff(s.g, steps(8, {{0.25, 1.0}})), 1e-15);
  EXPECT_LT(max_abs_diff(s.h, steps(8, {{0.5, 1.0}})), 1e-15);
  EXPECT_NEAR(s.value, 0.5, 1e-15);
  const Split c = optimal_l1_linf_split(GridFunction::constant({8}, 3.0), 0.5);
  EXPECT_LT(max_abs(c.g), 1e-15);
  EXPECT_NEAR(c.value, 1.5, 1e-15);
}

TEST(Split, BeatsRandomAlternatives) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const GridFunction f = random_heavy(8, 14);
  const StepProfile p = rearrangement(f);
  for (double t : {0.05, 0.3, 0.9}) {
    const Split s = optimal_l1_linf_split(f, t);
    EXPECT_LT(max_abs_diff(s.g + s.h, f), 1e-13);
    EXPECT_NEAR(s.value, t * p.average(t), 1e-12 * s.value);
    for (int trial = 0; trial < 100; ++trial) {
      const double cap = max_abs(f) * u(rng);
      GridFunction g = GridFunction::zeros({8}), h = GridFunction::zeros({8});
      for (std::size_t i = 0; i < f.count(); ++i) {
        const double m = std::abs(f[i]);
        h[i] = m > cap ? f[i] * (cap / m) : f[i];
        g[i] = f[i] - h[i];
      }
      EXPECT_LE(s.value, norm(g, NormSpec::lp(1)) + t * max_abs(h) + 1e-12);
    }
  }
}
