#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omni/model.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"
#include "omni/segmented.hpp"
#include "omni/sfm.hpp"

namespace omni {

// Nested minimal minimizers {i} = U_q < ... < U_0 of the fusion problem of
// one iteration, with critical values alpha_q < ... < alpha_0 = H(V):
// U_alpha = U_q on [0, alpha_q] and U_j on (alpha_{j+1}, alpha_j].
// Both lists are stored in increasing order. When the whole prefix V_i
// never becomes the minimizer below H(V), the chain tops out below V_i.
struct MinimizerChain {
  std::vector<Rational> alphas;
  std::vector<UserSet> sets;

  Segmented<UserSet> segmented() const { return Segmented<UserSet>::from_pieces(alphas, sets); }
};

// One evaluation point of the strong-map search.
struct StrMapProbe {
  Rational alpha;
  Partition down;
  Partition up;
  UserSet fused;     // minimal minimizer at alpha
  Partition result;  // partition of V_i after the fusion update at alpha
};

struct StrMapOutcome {
  std::vector<UserSet> fused;  // distinct minimal minimizers found, by inclusion
  std::vector<StrMapProbe> probes;  // in call order
  std::size_t sfm_calls = 0;
};

struct IterationReport {
  std::size_t user = 0;  // 0-based index of the user added
  MinimizerChain chain;
  std::vector<StrMapProbe> probes;
  std::size_t sfm_calls = 0;
};

// Segmented partition Q_alpha(V_i) and rate vector r_{alpha, V_i} for all
// alpha in [0, H(V)] after `users` = i users have been processed. This is the
// value user i hands to user i+1 in a pass-along sweep.
struct ParState {
  std::size_t users;
  Segmented<Partition> partitions;
  Segmented<AffineRateVector> rates;
  std::optional<IterationReport> last_iteration;
  std::size_t total_sfm_calls = 0;
};

// State after user 1: Q = {{1}}, r_1 = alpha - H(V) + H({1}).
ParState par_initial(const SourceModel& model);

// Fusion problem of the next iteration at a fixed alpha: blocks of
// Q_alpha(V_{i-1}) plus {user}, rates of V_{i-1} plus r_user = alpha - H(V).
// `state` is the state for V_{i-1}; `user` must equal state.users.
FusionOracle par_fusion_oracle(const SourceModel& model, const ParState& state, std::size_t user,
                               const Rational& alpha);

// Strong-map search for the minimal minimizers of the next iteration between
// partitions `down` < `up` of V_i. Throws DomainError unless `down` is
// strictly finer than `up`.
StrMapOutcome str_map(const SourceModel& model, const ParState& state, std::size_t user, const Partition& down,
                      const Partition& up, SfmMethod method = SfmMethod::min_norm_point);

// Critical values of a nested chain of minimizers, from
//   r_{alpha_j}(U_{j-1} \ U_j) = H(U_{j-1}) - H(U_j),
// solved on the segments of state.rates. `sets` must be strictly nested and
// start at {user}; V_i is appended when missing and dropped again when its
// critical value lands on H(V). Throws ConsistencyError if an equation has
// no root.
MinimizerChain solve_critical_alphas(const SourceModel& model, const ParState& state, std::size_t user,
                                     std::vector<UserSet> sets);

// Adds user state.users to the sweep.
ParState par_iteration(const SourceModel& model, const ParState& state, SfmMethod method = SfmMethod::min_norm_point);

// Principal sequence of partitions read off a segmented partition.
// critical_points[j] is the upper end of the segment on which chain[j]
// holds, both in increasing order, so the last critical point is the top of
// the range. min_sum_rate is the upper end of the highest segment whose
// partition is not the single block; finest_maximizer is that partition.
struct PSPResult {
  std::vector<Rational> critical_points;
  std::vector<Partition> chain;
  Rational min_sum_rate;
  Partition finest_maximizer;
  RateVector optimal_rate_vector;
  Segmented<Partition> partitions;
  Segmented<AffineRateVector> rates;
};

// PSP of V_i from the state after iteration i (i >= 2), on the shifted axis
// alpha' = alpha - H(V) + H(V_i) so the range is [0, H(V_i)].
PSPResult psp_of_prefix(const SourceModel& model, const ParState& state);

struct ParRun {
  ParState state;
  PSPResult psp;
};

ParRun run_par(const SourceModel& model, SfmMethod method = SfmMethod::min_norm_point);

// Baseline: iterate alpha <- H(V) - (H[P] - H(V)) / (|P| - 1) with a
// coordinate-saturation call per round until the partition stabilizes.
struct MdaResult {
  Rational min_sum_rate;
  Partition partition;
  RateVector rates;
  std::size_t rounds = 0;
  std::size_t sfm_calls = 0;
};

MdaResult mda_reference(const SourceModel& model, SfmMethod method = SfmMethod::min_norm_point);

}  // namespace omni
