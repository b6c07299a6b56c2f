#include <gtest/gtest.h>

#include "omni/errors.hpp"
#include "omni/oracle.hpp"
#include "omni/par.hpp"
#include "omni/so.hpp"
#include "support.hpp"

namespace omni {
namespace {

using test::example1;
using test::q;
using test::rates;

TEST(So, LowerBound) {
  EXPECT_EQ(lower_bound_alpha(example1()), q(23, 4));
  EXPECT_LE(lower_bound_alpha(example1()), run_par(example1()).psp.min_sum_rate);
  // Tight for two users.
  SourceModel two(BitPoolSource({{"a", "s"}, {"b", "s"}}));
  EXPECT_EQ(lower_bound_alpha(two), oracle::brute_min_sum_rate(two, two.ground()).value);
  EXPECT_EQ(lower_bound_alpha(two), 2);
}

TEST(So, DefaultPlan) {
  auto plan = find_complimentary(example1());
  ASSERT_TRUE(plan);
  EXPECT_EQ(plan->subset, UserSet::of_ids({1, 2}));
  EXPECT_EQ(plan->found_at_iteration, 2u);
  EXPECT_EQ(plan->local_alpha, 4);
  EXPECT_EQ(plan->local_rates, rates({q(2), q(0)}));
  EXPECT_EQ(plan->local_min_sum_rate, 2);
  EXPECT_EQ(plan->alpha_bar, q(23, 4));
}

TEST(So, OverriddenLowerBoundAtLastIteration) {
  auto plan = find_complimentary(example1(), {q(25, 4), 5, SfmMethod::min_norm_point});
  ASSERT_TRUE(plan);
  EXPECT_EQ(plan->subset, UserSet::of_ids({1, 2, 5}));
  EXPECT_EQ(plan->local_alpha, 6);
  EXPECT_EQ(plan->local_rates, rates({q(4), q(0), q(1)}));
  EXPECT_EQ(plan->local_min_sum_rate, oracle::brute_min_sum_rate(example1(), UserSet::of_ids({1, 2, 5})).value);
}

TEST(So, OverrideAboveMinSumRateIsRejected) {
  EXPECT_THROW(find_complimentary(example1(), {q(7), std::nullopt, SfmMethod::min_norm_point}), DomainError);
  EXPECT_NO_THROW(find_complimentary(example1(), {q(13, 2), std::nullopt, SfmMethod::min_norm_point}));
  EXPECT_THROW(find_complimentary(example1(), {q(-1), std::nullopt, SfmMethod::min_norm_point}), DomainError);
  EXPECT_THROW(find_complimentary(example1(), {std::nullopt, 1, SfmMethod::min_norm_point}), DomainError);
}

TEST(So, IndependentSourcesHaveNoPlan) {
  SourceModel m = read_model_file(test::data_path("independent.model"));
  EXPECT_FALSE(find_complimentary(m).has_value());
  // Brute force agrees: only singletons and {V} are optimal anywhere below H(V).
  auto b = oracle::brute_min_sum_rate(m, m.ground());
  EXPECT_EQ(b.partition, Partition::singletons(m.ground()));
}

TEST(So, VerifyComplimentary) {
  EXPECT_TRUE(verify_complimentary(example1(), UserSet::of_ids({1, 2}), q(23, 4)));
  EXPECT_FALSE(verify_complimentary(example1(), UserSet::of_ids({1, 2}), q(3)));
  EXPECT_TRUE(verify_complimentary(example1(), UserSet::of_ids({1, 2, 5}), q(25, 4)));
  EXPECT_THROW(verify_complimentary(example1(), UserSet::of_ids({1}), q(5)), DomainError);
  EXPECT_THROW(verify_complimentary(example1(), example1().ground(), q(5)), DomainError);
}

TEST(So, DecomposeRates) {
  const RateVector global = rates({q(9, 2), q(0), q(1, 2), q(1, 2), q(1)});
  auto plan = find_complimentary(example1());
  ASSERT_TRUE(plan);
  RateDecomposition d = decompose_rates(global, *plan);
  EXPECT_EQ(d.local, rates({q(2), q(0), q(0), q(0), q(0)}));
  EXPECT_EQ(d.residual, rates({q(5, 2), q(0), q(1, 2), q(1, 2), q(1)}));
  EXPECT_TRUE(d.compatible);

  auto wide = find_complimentary(example1(), {q(25, 4), 5, SfmMethod::min_norm_point});
  ASSERT_TRUE(wide);
  EXPECT_EQ(decompose_rates(global, *wide).residual, rates({q(1, 2), q(0), q(1, 2), q(1, 2), q(0)}));

  SOPlan zero = *plan;
  zero.local_rates = rates({q(0), q(0)});
  EXPECT_EQ(decompose_rates(global, zero).residual, global);

  SOPlan too_big = *plan;
  too_big.local_rates = rates({q(5), q(1)});
  EXPECT_FALSE(decompose_rates(global, too_big).compatible);
}

}  // namespace
}  // namespace omni
