#include <gtest/gtest.h>

#include "omni/errors.hpp"
#include "omni/segmented.hpp"
#include "support.hpp"

namespace omni {
namespace {

using test::parts;
using test::q;

TEST(UserSet, Basics) {
  UserSet s = UserSet::of_ids({1, 2, 5});
  EXPECT_EQ(s.bits(), 0b10011u);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(to_string(s), "{1,2,5}");
  EXPECT_EQ(to_string(UserSet()), "{}");
  EXPECT_EQ(UserSet::prefix(3), UserSet::of_ids({1, 2, 3}));
  EXPECT_EQ(UserSet::prefix(32).size(), 32u);
  EXPECT_EQ((s - UserSet::of_ids({1})).lowest(), 1u);
}

TEST(Partition, ValidatesBlocks) {
  const UserSet v = UserSet::prefix(3);
  EXPECT_THROW(Partition(v, {UserSet::of_ids({1, 2}), UserSet::of_ids({2, 3})}), DomainError);
  EXPECT_THROW(Partition(v, {UserSet::of_ids({1, 2})}), DomainError);
  EXPECT_THROW(Partition(v, {UserSet::of_ids({1, 2, 3}), UserSet()}), DomainError);
  Partition p(v, {UserSet::of_ids({3}), UserSet::of_ids({1, 2})});
  EXPECT_EQ(to_string(p), "{1,2} {3}");
  EXPECT_EQ(p.block_of(1), UserSet::of_ids({1, 2}));
}

TEST(Partition, Refines) {
  EXPECT_TRUE(refines(parts({{1}, {2}, {3}}), parts({{1, 2}, {3}})));
  EXPECT_FALSE(refines(parts({{1, 2}, {3}}), parts({{1, 3}, {2}})));
  EXPECT_FALSE(refines(parts({{1, 3}, {2}}), parts({{1, 2}, {3}})));
  EXPECT_TRUE(refines(parts({{1, 2, 5}, {3}, {4}}), parts({{1, 2, 3, 4, 5}})));
  EXPECT_TRUE(refines(parts({{1, 2}, {3}}), parts({{1, 2}, {3}})));
  EXPECT_THROW(refines(parts({{1}, {2}}), parts({{1, 2, 3}})), DomainError);
}

TEST(Partition, MergeBlocks) {
  EXPECT_EQ(merge_blocks(parts({{1}, {2}}), UserSet::of_ids({1, 2})), parts({{1, 2}}));
  EXPECT_EQ(merge_blocks(parts({{1, 2}, {3}}), UserSet::of_ids({1, 2})), parts({{1, 2}, {3}}));
  EXPECT_EQ(merge_blocks(parts({{1, 2}, {3}, {4}, {5}}), UserSet::of_ids({1, 2, 5})), parts({{1, 2, 5}, {3}, {4}}));
  EXPECT_THROW(merge_blocks(parts({{1, 2}, {3}}), UserSet::of_ids({1, 3})), DomainError);
}

TEST(Partition, Meet) {
  EXPECT_EQ(meet(parts({{1, 2, 3}, {4}}), parts({{1, 2}, {3, 4}})), parts({{1, 2}, {3}, {4}}));
  EXPECT_EQ(meet(parts({{1, 2}}), parts({{1, 2}})), parts({{1, 2}}));
}

TEST(Partition, SingletonsAndWhole) {
  const UserSet v = UserSet::prefix(4);
  EXPECT_EQ(Partition::singletons(v).size(), 4u);
  EXPECT_EQ(Partition::whole(v).size(), 1u);
  EXPECT_EQ(Partition::singletons(UserSet::prefix(3)).with_singleton(3), Partition::singletons(v));
}

TEST(Affine, Rendering) {
  EXPECT_EQ(to_string(AffineValue{q(14), q(-2)}), "14 - 2*alpha");
  EXPECT_EQ(to_string(AffineValue{q(-2), q(1)}), "alpha - 2");
  EXPECT_EQ(to_string(AffineValue{q(0), q(0)}), "0");
  EXPECT_EQ(to_string(test::rates({q(9, 2), q(0), q(1, 2), q(1, 2), q(1)})), "(9/2, 0, 1/2, 1/2, 1)");
  EXPECT_EQ((AffineValue{q(1), q(2)} + AffineValue{q(3), q(-1)}).at(q(2)), 6);
}

// Two-user state of the running example.
Segmented<Partition> eq6_partitions() {
  return Segmented<Partition>::from_pieces({q(4), q(10)}, {parts({{1}, {2}}), parts({{1, 2}})});
}

TEST(Segmented, ClosedRightEnds) {
  auto s = eq6_partitions();
  EXPECT_EQ(s.value_at(q(4)), parts({{1}, {2}}));
  EXPECT_EQ(s.value_at(q(4) + q(1, 1000)), parts({{1, 2}}));
  EXPECT_EQ(s.value_at(q(0)), parts({{1}, {2}}));
  EXPECT_EQ(s.value_at(q(10)), parts({{1, 2}}));
  EXPECT_THROW(s.value_at(q(-1, 100)), DomainError);
  EXPECT_THROW(s.value_at(q(11)), DomainError);
  EXPECT_EQ(to_string(s.interval(0)), "[0, 4]");
  EXPECT_EQ(to_string(s.interval(1)), "(4, 10]");
}

TEST(Segmented, ConstantAndMerging) {
  Segmented<int> c(q(10), 7);
  EXPECT_EQ(c.value_at(q(3, 7)), 7);
  auto merged = Segmented<int>::from_pieces({q(0), q(2), q(2), q(5), q(9)}, {1, 1, 8, 3, 3});
  // Empty (2, 2] is dropped, equal neighbours merge.
  EXPECT_EQ(merged.uppers(), (std::vector<Rational>{q(2), q(9)}));
  EXPECT_EQ(merged.values(), (std::vector<int>{1, 3}));
}

TEST(Segmented, DegenerateFirstSegment) {
  auto s = Segmented<int>::from_pieces({q(0), q(3)}, {1, 2});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.value_at(q(0)), 1);
  EXPECT_EQ(s.value_at(q(1, 10)), 2);
}

TEST(Segmented, MapAndCombine) {
  auto s = eq6_partitions();
  auto sizes = s.map([](const Partition& p) { return p.size(); });
  EXPECT_EQ(sizes.values(), (std::vector<std::size_t>{2, 1}));
  auto constant = s.map([](const Partition&) { return 0; });
  EXPECT_EQ(constant.size(), 1u);

  auto other = Segmented<int>::from_pieces({q(7), q(10)}, {1, 2});
  auto both = combine(s, other, [](const AlphaInterval&, const Partition& p, int k) { return p.size() * 10 + k; });
  EXPECT_EQ(both.uppers(), (std::vector<Rational>{q(4), q(7), q(10)}));
  EXPECT_EQ(both.values(), (std::vector<std::size_t>{21, 11, 12}));
  EXPECT_THROW(combine(s, Segmented<int>(q(9), 0), [](const AlphaInterval&, const Partition&, int) { return 0; }),
               DomainError);
}

}  // namespace
}  // namespace omni
