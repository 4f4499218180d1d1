#include <gtest/gtest.h>

#include "quasinv/classifier.hpp"
#include "quasinv/oracle.hpp"
#include "quasinv/suite.hpp"

using namespace quasinv;

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_finite_maps(1).count(), 1u);
  EXPECT_EQ(enumerate_finite_maps(2).count(), 4u);
  EXPECT_EQ(enumerate_finite_maps(3).count(), 27u);
  std::uint64_t seen = 0;
  for (SelfMap m : enumerate_finite_maps(4)) {
    ASSERT_EQ(m.table().size(), 4);
    ++seen;
  }
  EXPECT_EQ(seen, 256u);
}

TEST(Enumeration, Bounds) {
  EXPECT_THROW(enumerate_finite_maps(0), bound_too_large);
  EXPECT_THROW(enumerate_finite_maps(8), bound_too_large);
}

TEST(BruteForceW, Examples) {
  EXPECT_TRUE(brute_force_w_table(maps::identity_finite(3)));
  EXPECT_TRUE(brute_force_w_table(SelfMap::finite({1, 2, 0})));
  const auto cycle4 = SelfMap::finite({1, 2, 3, 0});
  EXPECT_FALSE(brute_force_w_table(cycle4));
  EXPECT_EQ(first_w_failure(cycle4), (PointSet{0, 2}));
}

TEST(RandomMaps, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_described_map(seed), b = random_described_map(seed);
    EXPECT_EQ(a, b);
    EXPECT_NO_THROW(SelfMap(a.described()));
  }
  EXPECT_NE(random_described_map(1), random_described_map(2));
}

TEST(RandomMaps, ZeroShiftIsEventuallyIdentity) {
  RandomMapParams p;
  p.max_shift = 0;
  const auto m = random_described_map(2, p);
  const auto& d = m.described();
  for (Point x = d.prefix_len(); x < d.prefix_len() + 50; ++x) EXPECT_EQ(m(x), x);
}

TEST(Suite, EmptySelectionGivesEmptyReport) {
  SuiteConfig cfg;
  cfg.theorems = std::vector<std::string>{};
  auto rep = run_theorem_suite(cfg);
  EXPECT_TRUE(rep.theorems.empty());
  EXPECT_TRUE(rep.passed());
}

TEST(Suite, UnknownIdAndBadConfig) {
  SuiteConfig cfg;
  cfg.theorems = std::vector<std::string>{"no.such.check"};
  EXPECT_THROW(run_theorem_suite(cfg), config_error);
  SuiteConfig big;
  big.n_max = 9;
  EXPECT_THROW(run_theorem_suite(big), config_error);
  EXPECT_THROW(mutated_ops("no-such-mutant"), config_error);
}

TEST(Suite, SelectedChecksPassAndAreDeterministic) {
  SuiteConfig cfg;
  cfg.n_max = 4;
  cfg.window = 60;
  cfg.samples = 20;
  cfg.theorems = std::vector<std::string>{"classifier.subsets", "orbit.dichotomy", "qi.oracle", "p1.existence"};
  const auto a = run_theorem_suite(cfg), b = run_theorem_suite(cfg);
  EXPECT_TRUE(a.passed()) << a.dump(2);
  EXPECT_EQ(a.theorems.size(), 4u);
  EXPECT_GT(a.checked_count(), 0u);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suite, EveryRegisteredIdRuns) {
  const auto ids = theorem_ids();
  EXPECT_GE(ids.size(), 25u);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(Mutants, FourCycleMutantFailsExactlyOnce) {
  SuiteConfig cfg;
  cfg.theorems = std::vector<std::string>{"classifier.subsets"};
  cfg.ops = mutated_ops("classifier-accepts-4-cycle");
  const auto rep = run_theorem_suite(cfg);
  ASSERT_EQ(rep.failure_count(), 1u);
  const auto& ce = rep.theorems[0].failures.at(0);
  EXPECT_EQ(ce.set, to_json(PointSet{0, 2}));
  // The stored counterexample re-parses and fails again without the mutant.
  const auto m = map_from_json(ce.map);
  EXPECT_EQ(m, SelfMap::finite({1, 2, 3, 0}));
  EXPECT_FALSE(classify_subsets_1qi(m));
  EXPECT_EQ(first_w_failure(m), (PointSet{0, 2}));
}

TEST(Mutants, CatalogueHasFiveDistinctEntries) {
  const auto& cat = mutant_catalogue();
  ASSERT_EQ(cat.size(), 5u);
  std::set<std::string> names;
  for (const auto& m : cat) names.insert(m.name);
  EXPECT_EQ(names.size(), 5u);
}
