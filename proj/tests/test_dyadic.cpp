#include <gtest/gtest.h>

#include "lpk/dyadic.hpp"
#include "lpk/errors.hpp"
#include "lpk/plateau.hpp"

using namespace lpk;

namespace {

void expect_arc(const TorusInterval& I, double left, double length) {
  EXPECT_NEAR(I.left, left, 1e-15);
  EXPECT_NEAR(I.length, length, 1e-15);
}

}  // namespace

TEST(Dyadic, ParseAndText) {
  const auto I = DyadicInterval::parse("3:5");
  EXPECT_EQ(I.level, 3);
  EXPECT_EQ(I.index, 5);
  EXPECT_EQ(I.text(), "3:5");
  EXPECT_DOUBLE_EQ(I.left(), 5.0 / 8);
  EXPECT_DOUBLE_EQ(I.length(), 1.0 / 8);
  EXPECT_THROW(DyadicInterval::parse("3-5"), ParseError);
  EXPECT_THROW(DyadicInterval::parse("3:5x"), ParseError);
  EXPECT_THROW(DyadicInterval::make(0, 0), LevelError);
  EXPECT_THROW(DyadicInterval::make(2, 4), LevelError);
}

TEST(Dyadic, TreeNavigation) {
  const auto I = DyadicInterval::make(4, 11);
  EXPECT_EQ(I.parent(), DyadicInterval::make(3, 5));
  EXPECT_EQ(I.ancestor(1), DyadicInterval::make(1, 1));
  EXPECT_EQ(I.child(0), DyadicInterval::make(5, 22));
  EXPECT_EQ(I.child(1), DyadicInterval::make(5, 23));
  EXPECT_EQ(I.first_sample(6), 44u);
  EXPECT_EQ(I.sample_count(6), 4u);
  EXPECT_THROW(DyadicInterval::make(1, 0).parent(), LevelError);
  EXPECT_THROW(I.first_sample(3), LevelError);
}

TEST(Dyadic, RelationExamples) {
  const auto a = DyadicInterval::make(2, 0), b = DyadicInterval::make(1, 0), c = DyadicInterval::make(2, 1);
  EXPECT_EQ(relate(a, b), Relation::a_inside_b);
  EXPECT_EQ(relate(b, a), Relation::b_inside_a);
  EXPECT_EQ(relate(a, c), Relation::disjoint);
  EXPECT_EQ(relate(a, a), Relation::equal);
}

// Two dyadic intervals are nested or disjoint; checked against sample sets at N = 64.
TEST(Dyadic, NestedOrDisjointExhaustive) {
  const int L = 6;
  std::vector<DyadicInterval> all;
  for (int k = 1; k <= L; ++k)
    for (long j = 0; j < (1L << k); ++j) all.push_back(DyadicInterval::make(k, j));
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto sa = TorusInterval::of(a).samples(64), sb = TorusInterval::of(b).samples(64);
      std::vector<std::size_t> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      const Relation r = relate(a, b);
      if (common.empty()) {
        EXPECT_EQ(r, Relation::disjoint);
      } else if (common.size() == sa.size() && common.size() == sb.size()) {
        EXPECT_EQ(r, Relation::equal);
      } else if (common.size() == sa.size()) {
        EXPECT_EQ(r, Relation::a_inside_b);
      } else {
        ASSERT_EQ(common.size(), sb.size());
        EXPECT_EQ(r, Relation::b_inside_a);
      }
    }
}

TEST(Torus, ShiftExamples) {
  expect_arc(shift_interval(TorusInterval::make(0, 0.25), 1, 0.0), 0.25, 0.25);
  expect_arc(shift_interval(TorusInterval::make(0.75, 0.25), 1, 0.0), 0.0, 0.25);
  expect_arc(shift_interval(TorusInterval::make(0, 0.25), 0, 0.5), 0.125, 0.25);
  expect_arc(shift_interval(DyadicInterval::make(2, 3), -1, 0.0), 0.5, 0.25);
}

TEST(Torus, EnlargeShiftExamples) {
  expect_arc(enlarge_shift(DyadicInterval::make(3, 0), 1, 1), 0.25, 0.25);
  expect_arc(enlarge_shift(DyadicInterval::make(3, 3), 1, 0), 0.25, 0.25);
  expect_arc(enlarge_shift(DyadicInterval::make(3, 0), 2, -1), 0.5, 0.5);
  EXPECT_THROW(enlarge_shift(DyadicInterval::make(3, 0), 3, 0), LevelError);
}

TEST(Torus, ConcentricAndStar) {
  expect_arc(concentric_scale(TorusInterval::make(0.25, 0.25), 0.5), 5.0 / 16, 0.125);
  const TorusInterval s = TorusInterval::make(0, 0.25).star();
  expect_arc(s, 0.75, 0.75);
  EXPECT_TRUE(s.contains(0.8));
  EXPECT_TRUE(s.contains(0.4));
  EXPECT_FALSE(s.contains(0.6));
  EXPECT_TRUE(TorusInterval::make(0.1, 0.4).star().is_whole());
  EXPECT_THROW(TorusInterval::make(0, 0), DomainError);
}

TEST(Torus, Distances) {
  EXPECT_NEAR(dist_torus(0.1, 0.9), 0.2, 1e-15);
  EXPECT_EQ(dist_torus(0.25, 0.25), 0.0);
  const TorusInterval I = TorusInterval::make(0.9, 0.2);
  EXPECT_EQ(dist_torus(0.05, I), 0.0);
  EXPECT_NEAR(dist_torus(0.5, I), 0.4, 1e-15);
  EXPECT_NEAR(dist_torus(TorusInterval::make(0.2, 0.1), TorusInterval::make(0.5, 0.1)), 0.2, 1e-15);
  EXPECT_TRUE(intersects(I, TorusInterval::make(0.05, 0.01)));
  EXPECT_NEAR(wrap_unit(-0.25), 0.75, 1e-15);
  EXPECT_NEAR(wrap_unit(2.5), 0.5, 1e-15);
}

TEST(Torus, SampleMembershipWraps) {
  const TorusInterval I = TorusInterval::make(0.875, 0.25);
  EXPECT_EQ(I.samples(16), (std::vector<std::size_t>{0, 1, 14, 15}));
}

TEST(Plateau, Examples) {
  const Plateau p = build_plateau(-0.25, -0.125, 0.125, 0.25);
  EXPECT_EQ(p(0.0), 1.0);
  EXPECT_EQ(p(-0.25), 0.0);
  EXPECT_EQ(p(0.25), 0.0);
  for (double x = -0.3; x <= 0.3; x += 0.01) EXPECT_NEAR(p(x), p(-x), 1e-15);
  EXPECT_THROW(build_plateau(0, 0, 1, 2), DomainError);
}

TEST(Plateau, SmoothStepShape) {
  EXPECT_EQ(smooth_step(0.0), 0.0);
  EXPECT_EQ(smooth_step(1.0), 1.0);
  EXPECT_NEAR(smooth_step(0.5), 0.5, 1e-15);
  double prev = 0.0;
  for (double x = 0.01; x < 1.0; x += 0.01) {
    EXPECT_GE(smooth_step(x), prev);
    EXPECT_NEAR(smooth_step(x) + smooth_step(1.0 - x), 1.0, 1e-14);
    prev = smooth_step(x);
  }
}

TEST(Plateau, AnnulusIsEven) {
  const Annulus a(0.1, 0.2, 0.4, 0.5);
  EXPECT_EQ(a(0.0), 0.0);
  EXPECT_EQ(a(-0.3), 1.0);
  EXPECT_EQ(a(0.3), 1.0);
  EXPECT_EQ(a(0.6), 0.0);
  EXPECT_THROW(Annulus(0.0, 0.2, 0.4, 0.5), DomainError);
}
