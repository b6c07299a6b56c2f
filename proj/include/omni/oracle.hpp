#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omni/model.hpp"
#include "omni/partition.hpp"
#include "omni/rational.hpp"
#include "omni/user_set.hpp"

// Exhaustive reference routines for cross-checking the solvers.
namespace omni::oracle {

inline constexpr std::size_t kMaxCarrier = 8;

// Streams every partition of a carrier exactly once, via restricted-growth
// strings. Throws CapacityError above kMaxCarrier users.
class PartitionEnumeration {
 public:
  explicit PartitionEnumeration(UserSet carrier);

  // Next partition, or nullopt when exhausted.
  std::optional<Partition> next();

 private:
  std::vector<std::size_t> members_;
  std::vector<std::size_t> growth_;  // block label of each member
  std::vector<std::size_t> prefix_max_;
  bool done_ = false;
};

struct PartitionOptimum {
  Rational value;
  Partition partition;  // finest optimizer
};

// max over partitions P of the carrier with |P| > 1 of
//   sum_{C in P} (H(carrier) - H(C)) / (|P| - 1),
// i.e. the minimum sum-rate of the subsystem on `carrier`.
PartitionOptimum brute_min_sum_rate(const SourceModel& model, UserSet carrier);

// min over partitions of the carrier of f_alpha[P], f_alpha built with H(V).
PartitionOptimum brute_dilworth(const SourceModel& model, const Rational& alpha, UserSet carrier);

// Slepian-Wolf region of the subsystem on `carrier`:
//   r(X) >= H(carrier) - H(carrier \ X) for every nonempty X strictly inside.
// `rates` is aligned with carrier members in increasing order.
bool check_achievable(const SourceModel& model, const RateVector& rates, UserSet carrier);
inline bool check_achievable(const SourceModel& model, const RateVector& rates) {
  return check_achievable(model, rates, model.ground());
}

}  // namespace omni::oracle
