#pragma once

#include <cstddef>

#include "omni/model.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"
#include "omni/sfm.hpp"

namespace omni {

// f_alpha(X) = alpha - H(V) + H(X) for nonempty X, f_alpha(empty) = 0.
Rational f_alpha(const SourceModel& model, const Rational& alpha, UserSet set);

// f_alpha[P] = sum over blocks C of f_alpha(C).
Rational partition_value(const SourceModel& model, const Rational& alpha, const Partition& p);

struct DilworthResult {
  RateVector rates;  // aligned with carrier members in increasing order
  Partition partition;  // finest minimizer of f_alpha[.] over partitions of the carrier
  Rational truncation_value;  // = sum of rates
  std::size_t sfm_calls = 0;
};

// Coordinate saturation with capacity fusion at a fixed alpha. Users of the
// carrier are saturated in increasing index order; a non-prefix carrier is
// the reduction of f_alpha onto it. Throws DomainError for alpha outside
// [0, H(V)] or an empty carrier.
DilworthResult coord_sat_cap_fus(const SourceModel& model, const Rational& alpha, UserSet carrier,
                                 SfmMethod method = SfmMethod::min_norm_point);

// min over partitions P of the carrier of f_alpha[P].
Rational dilworth_truncation(const SourceModel& model, const Rational& alpha, UserSet carrier,
                             SfmMethod method = SfmMethod::min_norm_point);

}  // namespace omni
