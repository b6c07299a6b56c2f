#include <gtest/gtest.h>

#include <random>

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"
#include "omni/par.hpp"
#include "omni/sfm.hpp"
#include "support.hpp"

namespace omni {
namespace {

using test::example1;
using test::parts;
using test::q;

FusionOracle cscf_oracle(const Rational& alpha, const Partition& qpart, std::size_t anchor, const RateVector& r) {
  return make_fusion_oracle(example1(), alpha, qpart, r, anchor);
}

TEST(Sfm, Example1SecondUserAtThree) {
  // r after saturating user 1 at alpha = 3: (1, alpha - H(V)).
  FusionOracle o = cscf_oracle(q(3), parts({{1}, {2}}), 1, {q(1), q(-7)});
  for (SfmMethod m : {SfmMethod::brute_force, SfmMethod::min_norm_point}) {
    SfmResult r = minimize(o, m);
    EXPECT_EQ(r.minimal, UserSet::of_ids({2}));
    EXPECT_EQ(r.min_value, 6);
    EXPECT_EQ(r.min_value, o.evaluate(UserSet::of_ids({2})));
  }
}

TEST(Sfm, Example1SecondUserAtSix) {
  FusionOracle o = cscf_oracle(q(6), parts({{1}, {2}}), 1, {q(4), q(-4)});
  EXPECT_EQ(minimize_brute(o).minimal, UserSet::of_ids({1, 2}));
  EXPECT_EQ(minimize_mnp(o).minimal, UserSet::of_ids({1, 2}));
}

TEST(Sfm, AnchorOnly) {
  FusionOracle o = cscf_oracle(q(5), parts({{1}}), 0, {q(-5)});
  SfmResult b = minimize_brute(o), m = minimize_mnp(o);
  EXPECT_EQ(b.minimal, UserSet::of_ids({1}));
  EXPECT_EQ(b.maximal, UserSet::of_ids({1}));
  EXPECT_EQ(b.min_value, o.evaluate(UserSet::of_ids({1})));
  EXPECT_EQ(m.min_value, b.min_value);
  EXPECT_EQ(m.minimal, b.minimal);
}

TEST(Sfm, Example4FirstProbe) {
  ParState state = par_initial(example1());
  while (state.users < 4) state = par_iteration(example1(), state);
  FusionOracle o = par_fusion_oracle(example1(), state, 4, q(23, 4));
  SfmResult b = minimize_brute(o), m = minimize_mnp(o);
  // f~({5}) = 5 < f~({1,2,5}) = 21/4, in line with {1,2} {3} {4} {5} on (4, 6].
  EXPECT_EQ(o.evaluate(UserSet::of_ids({5})), 5);
  EXPECT_EQ(o.evaluate(UserSet::of_ids({1, 2, 5})), q(21, 4));
  EXPECT_EQ(b.minimal, UserSet::of_ids({5}));
  EXPECT_EQ(m.minimal, b.minimal);
  EXPECT_EQ(m.maximal, b.maximal);
  EXPECT_EQ(m.min_value, b.min_value);
}

TEST(Sfm, AnchorMustBeABlock) {
  EXPECT_THROW(cscf_oracle(q(3), parts({{1, 2}}), 1, {q(0), q(0)}), DomainError);
}

// Random submodular fusion functions: weighted coverage minus a modular term,
// over random groupings of up to 8 blocks.
FusionOracle random_oracle(std::mt19937_64& rng) {
  const std::size_t users = 2 + rng() % 7;
  std::vector<std::uint32_t> atom_owner;
  std::vector<Rational> atom_weight, modular(users);
  const std::size_t atoms = 1 + rng() % 10;
  for (std::size_t a = 0; a < atoms; ++a) {
    atom_owner.push_back(static_cast<std::uint32_t>(rng() % ((1u << users) - 1)) + 1);
    atom_weight.emplace_back(static_cast<long long>(1 + rng() % 9), static_cast<long long>(1 + rng() % 3));
  }
  for (auto& x : modular) x = Rational(static_cast<long long>(rng() % 25) - 8, static_cast<long long>(1 + rng() % 4));

  // Group users into blocks at random.
  std::vector<UserSet> groups(users);
  for (std::size_t u = 0; u < users; ++u) groups[rng() % users] |= UserSet::single(u);
  std::erase_if(groups, [](UserSet b) { return b.empty(); });
  FusionOracle o;
  o.blocks = groups;
  o.anchor = rng() % groups.size();
  o.evaluate = [atom_owner, atom_weight, modular](UserSet s) {
    Rational v = 0;
    for (std::size_t a = 0; a < atom_owner.size(); ++a) {
      if (atom_owner[a] & s.bits()) v += atom_weight[a];
    }
    for (std::size_t m : s.members()) v -= modular[m];
    return v;
  };
  return o;
}

TEST(Sfm, MinNormPointMatchesBruteForceOnRandomOracles) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    FusionOracle o = random_oracle(rng);
    SfmResult b = minimize_brute(o);
    SfmResult m = minimize_mnp(o);
    ASSERT_EQ(m.min_value, b.min_value) << "trial " << trial;
    ASSERT_EQ(m.minimal, b.minimal) << "trial " << trial;
    ASSERT_EQ(m.maximal, b.maximal) << "trial " << trial;
  }
}

// Minimizers of a submodular function form a lattice: the extreme ones
// attain the minimum, contain the anchor, and bracket every other minimizer.
TEST(Sfm, MinimizersFormALattice) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    FusionOracle o = random_oracle(rng);
    SfmResult b = minimize_brute(o);
    const UserSet anchor = o.anchor_block();
    EXPECT_TRUE(anchor.subset_of(b.minimal));
    EXPECT_TRUE(b.minimal.subset_of(b.maximal));
    EXPECT_EQ(o.evaluate(b.minimal), b.min_value);
    EXPECT_EQ(o.evaluate(b.maximal), b.min_value);
    const std::size_t k = o.blocks.size();
    for (std::uint32_t sel = 0; sel < (1u << k); ++sel) {
      UserSet s;
      for (std::size_t j = 0; j < k; ++j) {
        if (sel >> j & 1u) s |= o.blocks[j];
      }
      if (!anchor.subset_of(s)) continue;
      const Rational v = o.evaluate(s);
      EXPECT_GE(v, b.min_value);
      if (v == b.min_value) {
        EXPECT_TRUE(b.minimal.subset_of(s));
        EXPECT_TRUE(s.subset_of(b.maximal));
      }
    }
  }
}

TEST(Sfm, RejectsNonSubmodularInput) {
  FusionOracle o;
  o.blocks = {UserSet::of_ids({1}), UserSet::of_ids({2}), UserSet::of_ids({3})};
  o.anchor = 0;
  // Both {1,2} and {1,3} minimize but their intersection does not.
  o.evaluate = [](UserSet s) { return s.size() == 2 ? Rational(0) : Rational(1); };
  EXPECT_THROW(minimize_brute(o), ConsistencyError);
}

// Minimizers found on real PAR states agree between the two solvers.
TEST(Sfm, MinNormPointMatchesBruteForceOnParStates) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    SourceModel m = test::random_bitpool_model(rng, 3, 7, 12);
    ParState state = par_initial(m);
    while (state.users + 1 < m.size()) state = par_iteration(m, state);
    for (int s = 0; s < 5; ++s) {
      Rational alpha = m.total() * Rational(static_cast<long long>(rng() % 41), 40);
      FusionOracle o = par_fusion_oracle(m, state, state.users, alpha);
      SfmResult b = minimize_brute(o), n = minimize_mnp(o);
      ASSERT_EQ(n.min_value, b.min_value);
      ASSERT_EQ(n.minimal, b.minimal);
      ASSERT_EQ(n.maximal, b.maximal);
    }
  }
}

}  // namespace
}  // namespace omni
