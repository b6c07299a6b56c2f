#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "omni/model.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"
#include "omni/user_set.hpp"

namespace omni {

// Set function over fusions (unions) of the blocks of a partition, restricted
// to fusions that contain the anchor block. `evaluate` receives the fused
// user set and must be submodular on that lattice.
struct FusionOracle {
  std::vector<UserSet> blocks;
  std::size_t anchor = 0;  // index into blocks
  std::function<Rational(UserSet)> evaluate;

  UserSet anchor_block() const { return blocks.at(anchor); }
};

// The fusion function of coordinate saturation:
//   g(X) = f_alpha(X) - r(X),  f_alpha(X) = alpha - H(V) + H(X),
// over unions of blocks of q that contain {anchor_user}. `rates` is indexed by
// user and must cover the carrier of q. The oracle keeps a reference to
// `model` and its own copy of `rates`.
FusionOracle make_fusion_oracle(const SourceModel& model, const Rational& alpha, const Partition& q,
                                RateVector rates, std::size_t anchor_user);

struct SfmResult {
  Rational min_value;
  UserSet minimal;  // intersection of all minimizers
  UserSet maximal;  // union of all minimizers
};

enum class SfmMethod { brute_force, min_norm_point };

inline constexpr std::size_t kBruteForceMaxBlocks = 24;

// Exhaustive search over all fusions. Throws CapacityError beyond 24
// non-anchor blocks, ConsistencyError if the minimizers fail to form a lattice.
SfmResult minimize_brute(const FusionOracle& oracle);

// Fujishige-Wolfe minimum-norm point on the base polytope of
//   h(Y) = g(anchor u Y) - g(anchor)
// over the non-anchor blocks, in exact arithmetic. Throws SolverError on
// iteration cap or a failed optimality certificate.
SfmResult minimize_mnp(const FusionOracle& oracle, std::size_t max_iterations = 10000);

// min_norm_point falls back to brute force on SolverError.
SfmResult minimize(const FusionOracle& oracle, SfmMethod method);

}  // namespace omni
