#include <gtest/gtest.h>

#include "quasinv/selfmap.hpp"

using namespace quasinv;

TEST(Eval, SuccessorAddsOne) { EXPECT_EQ(eval(maps::succ(), 5), 6); }

TEST(Eval, ConjugateOfSuccessorSendsZeroToTwo) { EXPECT_EQ(eval(maps::remark_conjugate(), 0), 2); }

TEST(Eval, FiniteTableLookup) { EXPECT_EQ(eval(SelfMap::finite({1, 2, 0}), 2), 0); }

TEST(Eval, RejectsPointsOutsideTheDomain) {
  EXPECT_THROW(eval(SelfMap::finite({1, 2, 0}), 3), out_of_domain);
  EXPECT_THROW(eval(maps::succ(), -1), out_of_domain);
}

TEST(Eval, TailRuleUsesResidueOfThePoint) {
  const auto m = maps::remark_conjugate();  // N = 1, even -> -1, odd -> +3
  EXPECT_EQ(m(1), 4);
  EXPECT_EQ(m(2), 1);
  EXPECT_EQ(m(7), 10);
  EXPECT_EQ(m(10), 9);
}

TEST(Iterate, ZeroStepsIsIdentity) {
  EXPECT_EQ(iterate(maps::remark_conjugate(), 9, 0), 9);
  EXPECT_EQ(iterate(SelfMap::finite({1, 2, 0}), 1, 0), 1);
}

TEST(Iterate, Successor) { EXPECT_EQ(iterate(maps::succ(), 0, 4), 4); }

TEST(Iterate, ConjugateOfSuccessorThreeSteps) { EXPECT_EQ(iterate(maps::remark_conjugate(), 0, 3), 4); }

TEST(Iterate, IsAdditive) {
  const auto m = SelfMap::nat({3, 0, 5}, {2, -3, 1});
  for (Point x = 0; x < 15; ++x)
    for (std::uint64_t a = 0; a < 6; ++a)
      for (std::uint64_t b = 0; b < 6; ++b) EXPECT_EQ(iterate(m, iterate(m, x, a), b), iterate(m, x, a + b));
}

TEST(ParseMap, FiniteTable) {
  const auto m = parse_map(R"({"kind":"finite","size":3,"table":[1,2,0]})");
  ASSERT_TRUE(m.is_finite());
  EXPECT_EQ(m.table().table, (std::vector<Point>{1, 2, 0}));
}

TEST(ParseMap, ConjugateOfSuccessor) {
  EXPECT_EQ(parse_map(R"({"kind":"nat","prefix":[2],"modulus":2,"shifts":[-1,3]})"), maps::remark_conjugate());
}

TEST(ParseMap, TableEntryOutOfRange) {
  EXPECT_THROW(parse_map(R"({"kind":"finite","size":2,"table":[0,5]})"), invalid_map);
}

TEST(ParseMap, MalformedInput) {
  EXPECT_THROW(parse_map("not json"), parse_error);
  EXPECT_THROW(parse_map(R"({"table":[0]})"), parse_error);
  EXPECT_THROW(parse_map(R"({"kind":"finite","table":[0.5]})"), parse_error);
  EXPECT_THROW(parse_map(R"({"kind":"tree"})"), parse_error);
  EXPECT_THROW(parse_map(R"({"kind":"finite","size":3,"table":[0,0]})"), invalid_map);
}

TEST(ParseMap, InvalidDescribedMaps) {
  EXPECT_THROW(parse_map(R"({"kind":"nat","modulus":2,"shifts":[1]})"), invalid_map);
  EXPECT_THROW(parse_map(R"({"kind":"nat","modulus":1,"shifts":[-1]})"), invalid_map);  // 0 -> -1
  EXPECT_THROW(parse_map(R"({"kind":"nat","prefix":[-2],"shifts":[0]})"), invalid_map);
  EXPECT_THROW(SelfMap::finite({}), invalid_map);
}

TEST(Serialize, CanonicalAndRoundTrips) {
  EXPECT_EQ(serialize_map(maps::succ()), R"({"kind":"nat","modulus":1,"shifts":[1]})");
  EXPECT_EQ(serialize_map(maps::remark_conjugate()), R"({"kind":"nat","modulus":2,"prefix":[2],"shifts":[-1,3]})");
  EXPECT_EQ(serialize_map(SelfMap::finite({1, 0})), R"({"kind":"finite","size":2,"table":[1,0]})");
  for (const auto& m : {maps::bullet(), maps::pivot(3, 0), SelfMap::finite({2, 2, 0})})
    EXPECT_EQ(parse_map(serialize_map(m)), m);
}

TEST(PointSet, SortsAndDeduplicates) {
  const PointSet s{5, 1, 3, 1};
  EXPECT_EQ(s.values(), (std::vector<Point>{1, 3, 5}));
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 5);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.with(2), (PointSet{1, 2, 3, 5}));
  EXPECT_EQ(s.without(3), (PointSet{1, 5}));
  EXPECT_EQ(s.minus(PointSet{1, 7}), (PointSet{3, 5}));
  EXPECT_EQ(s.united(PointSet{0}), (PointSet{0, 1, 3, 5}));
  EXPECT_TRUE(s.includes(PointSet{1, 5}));
  EXPECT_EQ(PointSet::from_mask(0b1011), (PointSet{0, 1, 3}));
  EXPECT_EQ(PointSet::range(2, 4), (PointSet{2, 3, 4}));
}

TEST(PointSet, JsonForms) {
  EXPECT_EQ(parse_point_set(R"({"set":[4,2]})"), (PointSet{2, 4}));
  EXPECT_THROW(parse_point_set(R"({"set":[-1]})"), parse_error);
  EXPECT_EQ(parse_interval(R"({"interval":[3,7]})"), Interval(3, 7));
  EXPECT_THROW(parse_interval(R"({"interval":[7,3]})"), parse_error);
  EXPECT_EQ(to_json(PointSet{1, 2}).dump(), R"({"set":[1,2]})");
}

TEST(Image, OfASet) { EXPECT_EQ(image(maps::succ(), PointSet{0, 4}), (PointSet{1, 5})); }

TEST(Identity, Detection) {
  EXPECT_TRUE(maps::identity_nat().is_identity());
  EXPECT_TRUE(SelfMap::nat({0, 1}, {0}).is_identity());
  EXPECT_TRUE(maps::identity_finite(4).is_identity());
  EXPECT_FALSE(maps::round_up_to_even().is_identity());
}
