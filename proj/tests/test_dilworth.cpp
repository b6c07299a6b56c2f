#include <gtest/gtest.h>

#include <random>

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"
#include "omni/oracle.hpp"
#include "support.hpp"

namespace omni {
namespace {

using test::example1;
using test::parts;
using test::q;
using test::rates;

TEST(Dilworth, Example1AtThreeOnTwoUsers) {
  DilworthResult r = coord_sat_cap_fus(example1(), q(3), UserSet::prefix(2));
  EXPECT_EQ(r.rates, rates({q(1), q(-1)}));
  EXPECT_EQ(r.partition, parts({{1}, {2}}));
}

TEST(Dilworth, Example1AtSixOnTwoUsers) {
  DilworthResult r = coord_sat_cap_fus(example1(), q(6), UserSet::prefix(2));
  EXPECT_EQ(r.rates, rates({q(4), q(0)}));
  EXPECT_EQ(r.partition, parts({{1, 2}}));
}

TEST(Dilworth, Example1OptimalRates) {
  for (SfmMethod m : {SfmMethod::brute_force, SfmMethod::min_norm_point}) {
    DilworthResult r = coord_sat_cap_fus(example1(), q(13, 2), example1().ground(), m);
    EXPECT_EQ(r.rates, rates({q(9, 2), q(0), q(1, 2), q(1, 2), q(1)}));
    EXPECT_EQ(r.partition, parts({{1, 2, 5}, {3}, {4}}));
    EXPECT_EQ(r.truncation_value, q(13, 2));
    EXPECT_GT(r.sfm_calls, 0u);
  }
}

TEST(Dilworth, TruncationValues) {
  const SourceModel& m = example1();
  EXPECT_EQ(dilworth_truncation(m, q(13, 2), m.ground()), q(13, 2));
  EXPECT_EQ(dilworth_truncation(m, q(0), m.ground()), -23);
  EXPECT_EQ(dilworth_truncation(m, q(5), m.ground()), 1);
  for (const Rational& a : {q(0), q(7, 3), q(10)}) EXPECT_EQ(dilworth_truncation(m, a, UserSet::prefix(1)), a - 2);
}

TEST(Dilworth, PartitionValue) {
  const SourceModel& m = example1();
  EXPECT_EQ(partition_value(m, q(17, 3), Partition::whole(m.ground())), q(17, 3));
  EXPECT_EQ(partition_value(m, q(4), Partition::singletons(m.ground())), -3);
  EXPECT_EQ(partition_value(m, q(6), parts({{1, 2, 5}, {3}, {4}})), 5);
  EXPECT_EQ(f_alpha(m, q(6), UserSet::of_ids({1, 2})), 4);
}

TEST(Dilworth, RejectsBadArguments) {
  const SourceModel& m = example1();
  EXPECT_THROW(coord_sat_cap_fus(m, q(-1), m.ground()), DomainError);
  EXPECT_THROW(coord_sat_cap_fus(m, q(11), m.ground()), DomainError);
  EXPECT_THROW(coord_sat_cap_fus(m, q(1), UserSet()), DomainError);
  EXPECT_THROW(coord_sat_cap_fus(m, q(1), UserSet::of_ids({6})), DomainError);
}

// Saturation agrees with exhaustive search over partitions, and its rates
// lie in the base polyhedron of the truncation: r(C) = f_alpha(C) on each
// block and r(X) <= f^_alpha(X) for every subset.
TEST(Dilworth, MatchesBruteForceOnRandomModels) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    SourceModel m = trial % 3 == 2 ? test::random_weighted_model(rng, 2 + rng() % 4, 7)
                                   : test::random_bitpool_model(rng, 2, 6, 12);
    for (int s = 0; s < 4; ++s) {
      const Rational alpha = m.total() * Rational(static_cast<long long>(rng() % 61), 60);
      const UserSet carrier = UserSet::prefix(1 + rng() % m.size());
      DilworthResult r = coord_sat_cap_fus(m, alpha, carrier);
      oracle::PartitionOptimum b = oracle::brute_dilworth(m, alpha, carrier);
      ASSERT_EQ(r.truncation_value, b.value);
      ASSERT_EQ(r.partition, b.partition);
      const auto members = carrier.members();
      for (std::uint32_t sel = 1; sel < (1u << members.size()); ++sel) {
        UserSet x;
        Rational sum = 0;
        for (std::size_t k = 0; k < members.size(); ++k) {
          if (sel >> k & 1u) {
            x = x.with(members[k]);
            sum += r.rates[k];
          }
        }
        EXPECT_LE(sum, oracle::brute_dilworth(m, alpha, x).value);
      }
      for (UserSet c : r.partition.blocks()) {
        Rational sum = 0;
        for (std::size_t k = 0; k < members.size(); ++k) {
          if (c.contains(members[k])) sum += r.rates[k];
        }
        EXPECT_EQ(sum, f_alpha(m, alpha, c));
      }
    }
  }
}

}  // namespace
}  // namespace omni
