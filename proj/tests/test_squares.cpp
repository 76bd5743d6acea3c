#include <gtest/gtest.h>

#include <random>

#include "lpk/adapted.hpp"
#include "lpk/coefficients.hpp"
#include "lpk/errors.hpp"
#include "lpk/fourier.hpp"
#include "lpk/hybrid.hpp"
#include "lpk/maximal.hpp"
#include "lpk/norms.hpp"
#include "lpk/square.hpp"
#include "oracles.hpp"

using namespace lpk;

namespace {

GridFunction random_grid(std::vector<int> L, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  GridFunction f = GridFunction::zeros(L);
  for (auto& v : f.values()) v = cplx(g(rng), g(rng));
  return f;
}

// |I|^{-1/2} φ at scale k, reference interval starting at sample s.
GridFunction unit_member(const AdaptedFamily& fam, int k, long s) {
  const long N = static_cast<long>(fam.size());
  return fam.member_at(k, ((s % N) + N) % N) * std::sqrt(std::ldexp(1.0, k));
}

}  // namespace

TEST(Coefficients, FieldMatchesDirectInnerProducts) {
  const int L = 7, K = 4;
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_1, K, L);
  const GridFunction f = random_grid({L}, 1);
  for (long n : {0L, 2L, -1L}) {
    const CoefficientField cf = coefficient_field(f, fam, n, 0.25);
    for (int k = 1; k <= K; ++k) {
      const long len = 128 >> k;
      for (long j = 0; j < (1L << k); ++j) {
        const cplx ref = inner_product(f, unit_member(fam, k, (j + n) * len + len / 4));
        EXPECT_NEAR(std::abs(cf.at(DyadicInterval::make(k, j)) - ref), 0.0, 1e-12);
      }
    }
  }
}

TEST(Coefficients, ConstantsVanishAndSelfPairing) {
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_2, 5, 8);
  const CoefficientField cf = coefficient_field(GridFunction::constant({8}, 3.0), fam, 0, 0.0);
  for (const auto& row : cf.c)
    for (auto v : row) EXPECT_LT(std::abs(v), 1e-12);
  const DyadicInterval I = DyadicInterval::make(4, 5);
  const GridFunction phi = fam.member(I);
  const cplx c = coefficient_field(phi, fam, 0, 0.0).at(I);
  EXPECT_NEAR(std::abs(c - inner_product(phi, fam.normalized_member(I))), 0.0, 1e-10);
  EXPECT_NEAR(c.real(), std::sqrt(16.0) * norm(phi, NormSpec::lp(2)) * norm(phi, NormSpec::lp(2)), 1e-10);
}

TEST(Coefficients, SynthesisIsAdjointOfCorrelation) {
  const int L = 7;
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_1, 4, L);
  const GridFunction D = random_grid({L}, 2), g = random_grid({L}, 3);
  for (int k = 1; k <= 4; ++k) {
    const cplx lhs = inner_product(synthesize(D, fam, k), g);
    const GridFunction c = normalized_correlation(fourier_coefficients(g), fam, k);
    cplx rhs{};
    for (std::size_t s = 0; s < D.count(); ++s) rhs += D[s] * std::conj(c[s]);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-11);
  }
}

TEST(Coefficients, SynthesisOfOneSpikeIsOneMember) {
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_2, 4, 7);
  GridFunction D = GridFunction::zeros({7});
  D[40] = 1.0;
  EXPECT_LT(max_abs_diff(synthesize(D, fam, 3), unit_member(fam, 3, 40)), 1e-12);
}

TEST(Epsilon, Sequences) {
  const auto a = EpsilonSequence::rademacher(5, 9), b = EpsilonSequence::rademacher(5, 9);
  for (int k = 1; k <= 5; ++k)
    for (long j = 0; j < (1L << k); ++j) {
      EXPECT_EQ(std::abs(a.at(k, j)), 1.0);
      EXPECT_EQ(a.at(k, j), b.at(k, j));
    }
  const auto c = EpsilonSequence::from_values({{cplx(4.0), cplx(1.0)}, {cplx(2.0), cplx(0, -1), 0.0, 0.0}});
  EXPECT_EQ(c.at(1, 0), cplx(1.0));
  EXPECT_EQ(c.at(2, 1), cplx(0, -0.25));
  const auto r = RectEpsilon::separable(a, EpsilonSequence::constant(3, cplx(0, 1)));
  EXPECT_EQ(r.at(4, 3, 2, 1), a.at(4, 3) * cplx(0, 1));
  const auto q = RectEpsilon::rademacher(4, 3, 11);
  EXPECT_EQ(std::abs(q.at(4, 15, 3, 7)), 1.0);
}

TEST(Square, MatchesDirectSum) {
  const int L = 7, K = 4;
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_1, K, L);
  const GridFunction f = random_grid({L}, 4);
  const GridFunction S = square_function(f, fam);
  std::vector<double> acc(128, 0.0);
  for (int k = 1; k <= K; ++k)
    for (long j = 0; j < (1L << k); ++j) {
      const DyadicInterval I = DyadicInterval::make(k, j);
      const double c = std::norm(inner_product(f, fam.normalized_member(I))) / I.length();
      for (std::size_t x = I.first_sample(L); x < I.first_sample(L) + I.sample_count(L); ++x) acc[x] += c;
    }
  for (std::size_t x = 0; x < 128; ++x) EXPECT_NEAR(S[x].real(), std::sqrt(acc[x]), 1e-12);
}

TEST(Square, ModesAndContracts) {
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_2, 5, 8);
  EXPECT_LT(max_abs(square_function(GridFunction::constant({8}, 1.0), fam)), 1e-12);
  const GridFunction f = random_grid({8}, 5);
  const GridFunction a = square_function(f, fam, SquareMode::shifted(1));
  const GridFunction b = square_function(f, fam, SquareMode::shifted_sup(1));
  for (std::size_t i = 0; i < f.count(); ++i) EXPECT_GE(b[i].real(), a[i].real() - 1e-13);
  EXPECT_EQ(SquareMode::parse("sup:3").n, 3);
  EXPECT_THROW(SquareMode::parse("loud"), ParseError);
  EXPECT_THROW(square_function(f, make_adapted_family(FamilyKind::low_pass, 5, 8)), ContractError);
}

TEST(Square, EnergyBoundedByInput) {
  const AdaptedFamily fam = make_adapted_family(FamilyKind::from_pou_1, 7, 10);
  for (unsigned seed = 6; seed < 10; ++seed) {
    const GridFunction f = random_grid({10}, seed);
    EXPECT_LE(norm(square_function(f, fam), NormSpec::lp(2)), 2.0 * norm(f, NormSpec::lp(2)));
  }
}

TEST(Linearization, MatchesDirectSumAndPairing) {
  const int L = 7, K = 4;
  const AdaptedFamily f1 = make_adapted_family(FamilyKind::from_pou_1, K, L);
  const AdaptedFamily f2 = make_adapted_family(FamilyKind::from_pou_2, K, L);
  const auto eps = EpsilonSequence::rademacher(K, 12);
  const GridFunction f = random_grid({L}, 7), g = random_grid({L}, 8);
  const GridFunction T = linearize(f, f1, f2, eps);
  GridFunction ref = GridFunction::zeros({L});
  cplx pairing{};
  for (int k = 1; k <= K; ++k)
    for (long j = 0; j < (1L << k); ++j) {
      const DyadicInterval I = DyadicInterval::make(k, j);
      const cplx c = eps.at(k, j) * inner_product(f, f1.normalized_member(I));
      ref += f2.normalized_member(I) * c;
      pairing += c * std::conj(inner_product(g, f2.normalized_member(I)));
    }
  EXPECT_LT(max_abs_diff(T, ref), 1e-12);
  EXPECT_NEAR(std::abs(inner_product(T, g) - pairing), 0.0, 1e-12);
  EXPECT_LT(max_abs(linearize(f, f1, f2, EpsilonSequence::constant(K, 0.0))), 1e-15);
  EXPECT_THROW(linearize(f, make_adapted_family(FamilyKind::low_pass, K, L), f2, eps), ContractError);
}

TEST(Linearization, AveragedShiftsStayBounded) {
  const AdaptedFamily f1 = make_adapted_family(FamilyKind::from_pou_1, 6, 9);
  const AdaptedFamily f2 = make_adapted_family(FamilyKind::from_pou_2, 6, 9);
  const GridFunction f = random_grid({9}, 9);
  const auto eps = EpsilonSequence::rademacher(6, 3);
  for (long n : {0L, 2L}) {
    const GridFunction T = linearize(f, f1, f2, eps, LinearShift{n, true});
    EXPECT_LE(norm(T, NormSpec::lp(2)), 4.0 * norm(f, NormSpec::lp(2)));
  }
}

TEST(Tensor, CorrelationMatchesDirectInnerProducts) {
  const AdaptedFamily fx = make_adapted_family(FamilyKind::from_pou_1, 2, 5);
  const AdaptedFamily fy = make_adapted_family(FamilyKind::from_pou_2, 2, 5);
  const GridFunction f = random_grid({5, 5}, 10);
  const Spectrum fh = fourier_coefficients(f);
  TensorCorrelator corr(fh, fx, fy);
  for (int kx = 1; kx <= 2; ++kx)
    for (int ky = 1; ky <= 2; ++ky) {
      const GridFunction c = tensor_correlation(fh, fx, kx, fy, ky);
      EXPECT_LT(max_abs_diff(c, corr(kx, ky)), 1e-13);
      for (long sx : {0L, 5L, 31L})
        for (long sy : {0L, 9L, 30L}) {
          const cplx ref = inner_product(f, tensor(unit_member(fx, kx, sx), unit_member(fy, ky, sy)));
          EXPECT_NEAR(std::abs(c.at(sx, sy) - ref), 0.0, 1e-12);
        }
    }
}

TEST(Tensor, SynthesizerAccumulatesBlocks) {
  const AdaptedFamily fx = make_adapted_family(FamilyKind::from_pou_1, 3, 6);
  const AdaptedFamily fy = make_adapted_family(FamilyKind::from_pou_2, 2, 5);
  TensorSynthesizer syn(fx, fy);
  GridFunction ref = GridFunction::zeros({6, 5});
  unsigned seed = 20;
  for (int kx = 1; kx <= 3; ++kx)
    for (int ky = 1; ky <= 2; ++ky) {
      const GridFunction D = random_grid({6, 5}, seed++);
      syn.add(D, kx, ky);
      ref += tensor_synthesize(D, fx, kx, fy, ky);
    }
  EXPECT_LT(max_abs_diff(syn.result(), ref), 1e-12);
}

TEST(Hybrid, SquareSquareFactorsOnTensors) {
  const AdaptedFamily fx = make_adapted_family(FamilyKind::from_pou_1, 4, 7);
  const AdaptedFamily fy = make_adapted_family(FamilyKind::from_pou_2, 3, 6);
  const GridFunction a = random_grid({7}, 30), b = random_grid({6}, 31);
  const GridFunction h = hybrid(tensor(a, b), {fx, fy}, HybridKind::SS);
  EXPECT_LT(max_abs_diff(h, tensor(square_function(a, fx), square_function(b, fy))), 1e-12);
  const GridFunction m = hybrid(tensor(a, b), {fx, fy}, HybridKind::MM);
  EXPECT_LT(max_abs_diff(m, tensor(adapted_maximal(a, fx), adapted_maximal(b, fy))), 1e-12);
  EXPECT_LT(max_abs(hybrid(GridFunction::constant({7, 6}, 2.0), {fx, fy}, HybridKind::SS)), 1e-12);
  EXPECT_EQ(parse_hybrid("MS"), HybridKind::MS);
}

TEST(Hybrid, MixedSlotsOnTensors) {
  const AdaptedFamily fx = make_adapted_family(FamilyKind::from_pou_1, 4, 7);
  const AdaptedFamily fy = make_adapted_family(FamilyKind::from_pou_2, 3, 6);
  const GridFunction a = random_grid({7}, 32), b = random_grid({6}, 33);
  const GridFunction h = hybrid(tensor(a, b), {fx, fy}, HybridKind::MS);
  EXPECT_LT(max_abs_diff(h, tensor(adapted_maximal(a, fx), square_function(b, fy))), 1e-12);
}

TEST(Hybrid, ThreeParameterProducts) {
  const std::array<AdaptedFamily, 3> fams = {make_adapted_family(FamilyKind::from_pou_1, 2, 5),
                                             make_adapted_family(FamilyKind::from_pou_2, 2, 5),
                                             make_adapted_family(FamilyKind::from_pou_1, 3, 6)};
  const GridFunction a = random_grid({5}, 40), b = random_grid({5}, 41), c = random_grid({6}, 42);
  const SampleCube f = SampleCube::tensor(a, b, c);
  const SampleCube s = hybrid3(f, fams, "SSS");
  const GridFunction sa = square_function(a, fams[0]), sb = square_function(b, fams[1]), sc = square_function(c, fams[2]);
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j)
      for (std::size_t k = 0; k < 64; ++k) EXPECT_NEAR(s.at(i, j, k).real(), (sa[i] * sb[j] * sc[k]).real(), 1e-12);
  const SampleCube zero = hybrid3(SampleCube::sample({5, 5, 6}, [](double, double, double) { return 1.0; }), fams, "SSS");
  for (auto v : zero.values) EXPECT_LT(std::abs(v), 1e-12);
}

TEST(Hybrid, CubeDirectionalMaximal) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0, 1);
  SampleCube f = SampleCube::zeros({4, 4, 5});
  for (auto& v : f.values) v = u(rng);
  const SampleCube m = cube_directional_maximal(f, 2);
  for (std::size_t i = 0; i < 16; i += 5)
    for (std::size_t j = 0; j < 16; j += 3) {
      std::vector<double> line(32);
      for (std::size_t k = 0; k < 32; ++k) line[k] = std::abs(f.at(i, j, k));
      const auto ref = oracle::hl(line);
      for (std::size_t k = 0; k < 32; ++k) EXPECT_NEAR(m.at(i, j, k).real(), ref[k], 1e-12);
    }
}
