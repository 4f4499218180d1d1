#include <gtest/gtest.h>

#include "quasinv/classifier.hpp"
#include "quasinv/oracle.hpp"
#include "quasinv/quasi_invariance.hpp"

using namespace quasinv;

namespace {

void expect_sound(const SelfMap& m, const SubsetClassification& c, Point hi) {
  for (std::uint64_t mask = 1; mask < (1u << (hi + 1)); ++mask) {
    const auto s = PointSet::from_mask(mask);
    const Point w = c.select(s);
    ASSERT_TRUE(s.contains(w)) << s;
    for (Point x : s)
      if (x != w) {
        ASSERT_TRUE(s.contains(m(x))) << s << " w=" << w;
      }
  }
}

void expect_sound(const SelfMap& m, const IntervalClassification& c, Point hi) {
  for (Point b = 0; b <= hi; ++b)
    for (Point a = 0; a <= b; ++a) {
      const Interval iv(a, b);
      const Point w = c.select(iv);
      ASSERT_TRUE(iv.contains(w)) << iv;
      for (Point x = a; x <= b; ++x)
        if (x != w) {
          ASSERT_TRUE(iv.contains(m(x))) << iv << " w=" << w << " x=" << x;
        }
    }
}

}  // namespace

TEST(Subsets, IdentityIsCaseOne) {
  auto c = classify_subsets_1qi(maps::identity_finite(4));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase, SubsetCase::one);
  EXPECT_EQ(c->a, 0);
  EXPECT_EQ(c->b, 0);
  EXPECT_EQ(c->c, 0);
  EXPECT_TRUE(classify_subsets_1qi(maps::identity_nat()));
}

TEST(Subsets, ThreeCyclePatchIsCaseTwo) {
  const auto m = SelfMap::finite({1, 2, 0, 3, 4});
  auto c = classify_subsets_1qi(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase, SubsetCase::two);
  EXPECT_EQ((std::tuple{c->a, c->b, c->c}), (std::tuple{0, 1, 2}));
  expect_sound(m, *c, 4);
}

TEST(Subsets, ChainOfThreeIsAbsent) {
  EXPECT_FALSE(classify_subsets_1qi(SelfMap::finite({1, 2, 3, 3})));
  EXPECT_FALSE(classify_subsets_1qi(SelfMap::nat({1, 2, 3}, {0})));
}

TEST(Subsets, FourCycleIsAbsent) { EXPECT_FALSE(classify_subsets_1qi(SelfMap::finite({1, 2, 3, 0}))); }

TEST(Subsets, MovedPairShapes) {
  auto chain = classify_subsets_1qi(SelfMap::finite({1, 2, 2}));  // 0 -> 1 -> 2 fixed
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->kase, SubsetCase::one);
  auto swap = classify_subsets_1qi(SelfMap::finite({1, 0, 2}));
  ASSERT_TRUE(swap);
  expect_sound(SelfMap::finite({1, 0, 2}), *swap, 2);
  EXPECT_FALSE(classify_subsets_1qi(SelfMap::finite({2, 2, 2})));  // 0 and 1 both move onto 2
}

TEST(Subsets, EventuallyIdentityNatMapsOnSmallSets) {
  const auto m = SelfMap::nat({1, 2, 0}, {0});
  auto c = classify_subsets_1qi(m);
  ASSERT_TRUE(c);
  expect_sound(m, *c, 6);
  const auto one = SelfMap::nat({0, 5}, {0});
  auto c1 = classify_subsets_1qi(one);
  ASSERT_TRUE(c1);
  expect_sound(one, *c1, 6);
  EXPECT_FALSE(classify_subsets_1qi(maps::succ()));
}

TEST(Subsets, NeedsThreePoints) {
  EXPECT_THROW(classify_subsets_1qi(SelfMap::finite({1, 0})), domain_too_small);
}

TEST(Subsets, AgreesWithBruteForceUpToFive) {
  for (Point n = 3; n <= 5; ++n)
    for (SelfMap m : enumerate_finite_maps(n)) {
      auto c = classify_subsets_1qi(m);
      ASSERT_EQ(c.has_value(), brute_force_w_table(m).has_value()) << serialize_map(m);
      if (c) expect_sound(m, *c, n - 1);
    }
}

TEST(Intervals, SuccessorIsCaseOne) {
  auto c = classify_intervals_1qi(maps::succ());
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase(), IntervalCase::one);
  EXPECT_FALSE(c->pivot());
  EXPECT_EQ(c->b(4), 4);
  EXPECT_EQ(c->beta_of_b(4), 5);
  EXPECT_EQ(c->select(Interval(3, 7)), 7);
}

TEST(Intervals, PivotMapIsCaseTwo) {
  const auto m = maps::pivot(3, 0);
  auto c = classify_intervals_1qi(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase(), IntervalCase::two);
  EXPECT_EQ(c->pivot(), 2);
  expect_sound(m, *c, 30);
}

TEST(Intervals, JumpThenDescendIsCaseThree) {
  const auto m = SelfMap::nat({2}, {-1});
  auto c = classify_intervals_1qi(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase(), IntervalCase::three);
  EXPECT_EQ(c->pivot(), -1);
  expect_sound(m, *c, 30);
}

TEST(Intervals, CaseThreeUpwardJumpFromAFixedStart) {
  // 0 fixed, 1 -> 5, n -> n-1: on [0,3] only 1 leaves, upward.
  const auto m = SelfMap::nat({0, 5}, {-1});
  auto c = classify_intervals_1qi(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kase(), IntervalCase::three);
  EXPECT_EQ(c->select(Interval(0, 3)), 1);
  expect_sound(m, *c, 30);
}

TEST(Intervals, AbsentWhenTwoPointsLeave) {
  EXPECT_FALSE(classify_intervals_1qi(maps::shift_by(2)));   // [0,1]: both leave
  EXPECT_FALSE(classify_intervals_1qi(maps::remark_conjugate()));
  EXPECT_THROW(classify_intervals_1qi(SelfMap::finite({0})), not_nat_domain);
}

TEST(Intervals, AgreesWithWindowSearch) {
  for (std::uint64_t seed = 100; seed < 400; ++seed) {
    const auto m = random_described_map(seed);
    auto c = classify_intervals_1qi(m);
    ASSERT_EQ(c.has_value(), !interval_w_failure(m, 30).has_value()) << serialize_map(m);
    if (c) expect_sound(m, *c, 30);
  }
}

TEST(Strict, Successor) {
  auto c = classify_strict_intervals_1qi(maps::succ());
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, StrictKind::succ);
  EXPECT_TRUE(c->exclusion_holds);
  EXPECT_EQ(c->select(Interval(2, 9)), 9);
}

TEST(Strict, PivotTwoFive) {
  const auto m = maps::pivot(2, 5);
  auto c = classify_strict_intervals_1qi(m);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, StrictKind::pivot);
  EXPECT_EQ(c->pivot, 2);
  EXPECT_EQ(c->target, 5);
  // [0,5] is invariant, so no removal point can map outside it.
  EXPECT_FALSE(c->exclusion_holds);
  ASSERT_TRUE(c->counterexample);
  EXPECT_EQ(*c->counterexample, Interval(0, 5));
  EXPECT_EQ(escapees(m, Interval(0, 5).to_set()).size(), 0u);
}

TEST(Strict, IdentityAndOthersAbsent) {
  EXPECT_FALSE(classify_strict_intervals_1qi(maps::identity_nat()));
  EXPECT_FALSE(classify_strict_intervals_1qi(maps::shift_by(2)));
  EXPECT_FALSE(classify_strict_intervals_1qi(maps::fixed_zero_then_succ()));
}

TEST(Strict, PivotCanonicalForm) {
  // Target n*+1 extends the successor run, so the pivot moves up by one.
  auto c = classify_strict_intervals_1qi(maps::pivot(2, 3));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->pivot, 3);
  EXPECT_EQ(c->target, 2);
}
