#include <gtest/gtest.h>

#include "quasinv/oracle.hpp"
#include "quasinv/orbit.hpp"

using namespace quasinv;

TEST(Orbit, ThreeCycle) {
  auto o = orbit(SelfMap::finite({1, 2, 0}), 0);
  ASSERT_TRUE(o.is_finite());
  EXPECT_TRUE(o.finite().tail.empty());
  EXPECT_EQ(o.finite().cycle, (std::vector<Point>{0, 1, 2}));
}

TEST(Orbit, TailThenCycle) {
  auto o = orbit(SelfMap::finite({1, 2, 3, 4, 2}), 0);
  ASSERT_TRUE(o.is_finite());
  EXPECT_EQ(o.finite().tail, (std::vector<Point>{0, 1}));
  EXPECT_EQ(o.finite().cycle, (std::vector<Point>{2, 3, 4}));
  EXPECT_EQ(o.at(7), 4);
}

TEST(Orbit, SuccessorIsInfinite) {
  auto o = orbit(maps::succ(), 0);
  ASSERT_TRUE(o.is_infinite());
  EXPECT_EQ(o.at(1000), 1000);
  EXPECT_EQ(o.index_of(37), 37u);
}

TEST(Orbit, BulletOrbitOmitsOnlyOne) {
  auto o = orbit(maps::bullet(), 0);
  ASSERT_TRUE(o.is_infinite());
  EXPECT_FALSE(o.contains(1));
  for (Point y : {0, 2, 3, 4, 100, 1001}) EXPECT_TRUE(o.contains(y)) << y;
  EXPECT_EQ(o.points_below(50).size(), 49u);
}

TEST(Orbit, DescendingMapsEndInCycles) {
  auto o = orbit(maps::pivot(3, 0), 9);
  ASSERT_TRUE(o.is_finite());
  EXPECT_EQ(o.finite().cycle, (std::vector<Point>{3, 0, 1, 2}));
  EXPECT_EQ(o.finite().tail.size(), 6u);
}

TEST(Orbit, ConjugateOfSuccessorCoversEverything) {
  auto o = orbit(maps::remark_conjugate(), 0);
  ASSERT_TRUE(o.is_infinite());
  EXPECT_EQ(o.first(8), (std::vector<Point>{0, 2, 1, 4, 3, 6, 5, 8}));
  for (Point y = 0; y < 300; ++y) EXPECT_TRUE(o.contains(y));
}

TEST(Orbit, AtMatchesSimulationOnRandomMaps) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto m = random_described_map(seed);
    OrbitEngine eng(m);
    for (Point x = 0; x < 25; ++x) {
      auto o = eng.orbit(x);
      auto naive = oracle::iterates(m, x, 300);
      for (std::size_t k = 0; k < naive.size(); ++k) ASSERT_EQ(o.at(k), naive[k]) << serialize_map(m) << " x=" << x;
      EXPECT_EQ(o.is_infinite(), oracle::looks_infinite(m, x)) << serialize_map(m) << " x=" << x;
    }
  }
}

TEST(HittingTime, Examples) {
  EXPECT_EQ(hitting_time(maps::succ(), 2, 5), 3u);
  EXPECT_EQ(hitting_time(maps::succ(), 5, 2), std::nullopt);
  EXPECT_EQ(hitting_time(SelfMap::finite({1, 2, 0}), 0, 2), 2u);
  EXPECT_THROW(hitting_time(SelfMap::finite({1, 2, 0}), 0, 3), out_of_domain);
}

TEST(OrbitsIntersect, Examples) {
  auto m = orbits_intersect(maps::succ(), 0, 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->point, 3);
  EXPECT_EQ(m->steps_from_a, 3u);
  EXPECT_EQ(m->steps_from_b, 0u);
  EXPECT_FALSE(orbits_intersect(maps::shift_by(2), 0, 1));
  EXPECT_FALSE(orbits_intersect(SelfMap::finite({1, 0, 3, 2}), 0, 2));
}

TEST(OrbitsIntersect, InfiniteAndFiniteNeverMeet) {
  const auto m = maps::fixed_zero_then_succ();
  EXPECT_FALSE(orbits_intersect(m, 0, 1));
  EXPECT_FALSE(orbits_intersect(m, 5, 0));
}

TEST(Xi, SuccessorTakesTheMaximum) {
  auto x = xi(maps::succ(), PointSet{2, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ(x->point, 5);
  EXPECT_EQ(x->hitting_times, (std::vector<std::pair<Point, std::uint64_t>>{{2, 3}, {5, 0}}));
}

TEST(Xi, ThreeCycleMinimalSum) {
  auto x = xi(SelfMap::finite({1, 2, 0}), PointSet{0, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(x->point, 1);
  EXPECT_EQ(x->total(), 1u);
}

TEST(Xi, TieBreaksToSmallestPoint) {
  // 2-cycle {0,1}: from {0,1}, both 0 and 1 cost one step in total.
  auto x = xi(SelfMap::finite({1, 0}), PointSet{0, 1});
  ASSERT_TRUE(x);
  EXPECT_EQ(x->point, 0);
}

TEST(Xi, SingletonIsItself) {
  for (Point a : {0, 3, 17}) {
    auto x = xi(maps::remark_conjugate(), PointSet{a});
    ASSERT_TRUE(x);
    EXPECT_EQ(x->point, a);
    EXPECT_EQ(x->total(), 0u);
  }
}

TEST(InDPhi, Examples) {
  EXPECT_FALSE(in_D_phi(maps::shift_by(2), PointSet{0, 1}));
  EXPECT_TRUE(in_D_phi(maps::succ(), PointSet{0, 4, 9}));
  EXPECT_FALSE(in_D_phi(maps::fixed_zero_then_succ(), PointSet{0, 1}));
  EXPECT_THROW(in_D_phi(maps::succ(), PointSet{}), precondition_error);
}

TEST(PTilde, Examples) {
  EXPECT_TRUE(check_p_tilde(SelfMap::finite({1, 0, 3, 2})));
  EXPECT_TRUE(check_p_tilde(maps::succ()));
  EXPECT_FALSE(check_p_tilde(maps::shift_by(2)));
  EXPECT_TRUE(check_p_tilde(maps::remark_conjugate()));
  EXPECT_FALSE(check_p_tilde(SelfMap::nat({}, {1, 3})));  // residue 0 stays, residue 1 stays
  EXPECT_TRUE(check_p_tilde(maps::pivot(2, 5)));          // no infinite orbit at all
}

TEST(Preimages, Exact) {
  EXPECT_EQ(preimages(maps::bullet(), 2), (std::vector<Point>{0, 1}));
  EXPECT_EQ(preimages(maps::remark_conjugate(), 4), (std::vector<Point>{1}));
  EXPECT_TRUE(preimages(maps::succ(), 0).empty());
  EXPECT_EQ(preimages(SelfMap::finite({2, 2, 0}), 2), (std::vector<Point>{0, 1}));
}

TEST(StructureWindow, RequiresNatMap) {
  EXPECT_THROW(structure_window(OrbitEngine(SelfMap::finite({0}))), not_nat_domain);
  auto w = structure_window(OrbitEngine(maps::bullet()));
  EXPECT_GT(w.end, 2);
  EXPECT_TRUE(w.infinite(0));
}
