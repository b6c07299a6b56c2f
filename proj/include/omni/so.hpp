#pragma once

#include <cstddef>
#include <optional>

#include "omni/model.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"
#include "omni/sfm.hpp"

namespace omni {

// A complimentary subset C and the local-omniscience rates inside it.
struct SOPlan {
  UserSet subset;
  Rational local_alpha;  // alpha_C, the lowest alpha with f_alpha(C) = f^_alpha(C)
  RateVector local_rates;  // aligned with subset members in increasing order
  Rational local_min_sum_rate;  // R_CO(C) = alpha_C - H(V) + H(C)
  std::size_t found_at_iteration = 0;  // |V_i| of the state it was read from
  Rational alpha_bar;  // lower bound the subset was detected at
};

// sum_i (H(V) - H({i})) / (|V| - 1), a lower bound on R_CO(V).
Rational lower_bound_alpha(const SourceModel& model);

struct SOOptions {
  // Lower bound to probe at; defaults to lower_bound_alpha. An override is
  // checked against R_CO(V) and rejected with DomainError if it exceeds it.
  std::optional<Rational> alpha_bar;
  // Inspect only the state after this many users (2..|V|) instead of
  // returning at the first iteration with a nonsingleton block.
  std::optional<std::size_t> iteration;
  SfmMethod method = SfmMethod::min_norm_point;
};

// Sweeps the parametric iterations and returns the first nonsingleton block
// of Q_{alpha_bar}(V_i), or nullopt if none appears.
std::optional<SOPlan> find_complimentary(const SourceModel& model, const SOOptions& options = {});

// f_alpha(C) == f^_alpha(C) on the reduction to C. Throws DomainError when C
// is a singleton or all of V.
bool verify_complimentary(const SourceModel& model, UserSet subset, const Rational& alpha,
                          SfmMethod method = SfmMethod::min_norm_point);

struct RateDecomposition {
  RateVector local;     // plan rates zero-extended to V
  RateVector residual;  // global - local
  bool compatible = true;  // false when some residual entry is negative
};

RateDecomposition decompose_rates(const RateVector& global, const SOPlan& plan);

}  // namespace omni
