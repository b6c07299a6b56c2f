#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omni/rational.hpp"
#include "omni/user_set.hpp"

namespace omni {

// Pairwise-disjoint nonempty blocks covering a carrier. Blocks are kept
// sorted by their smallest member, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError on empty, overlapping, or non-covering blocks.
  Partition(UserSet carrier, std::vector<UserSet> blocks);

  static Partition singletons(UserSet carrier);
  static Partition whole(UserSet carrier);

  UserSet carrier() const { return carrier_; }
  const std::vector<UserSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  // Block holding `user`; throws DomainError if the user is outside the carrier.
  UserSet block_of(std::size_t user) const;
  bool has_block(UserSet block) const;

  // Adds {user} as a new singleton block; the user must be new to the carrier.
  Partition with_singleton(std::size_t user) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  UserSet carrier_;
  std::vector<UserSet> blocks_;
};

// True iff every block of p is inside some block of q. Carriers must match.
bool refines(const Partition& p, const Partition& q);
// Replaces the blocks covered by `fused` with the single block `fused`.
// Throws DomainError if `fused` cuts a block.
Partition merge_blocks(const Partition& p, UserSet fused);
// Common refinement (nonempty pairwise block intersections).
Partition meet(const Partition& p, const Partition& q);

// "{1,2,5} {3} {4}".
std::string to_string(const Partition& p);

// intercept + slope * alpha.
struct AffineValue {
  Rational intercept;
  Rational slope;

  Rational at(const Rational& alpha) const { return intercept + slope * alpha; }
  friend bool operator==(const AffineValue&, const AffineValue&) = default;
};

AffineValue operator+(const AffineValue& a, const AffineValue& b);
AffineValue operator-(const AffineValue& a, const AffineValue& b);

// Rate entries in users' index order, each affine in alpha.
using AffineRateVector = std::vector<AffineValue>;
using RateVector = std::vector<Rational>;

RateVector evaluate(const AffineRateVector& rates, const Rational& alpha);

// "alpha - 2", "14 - 2*alpha", "1", "3/2*alpha".
std::string to_string(const AffineValue& value);
// "(9/2, 0, 1/2, 1/2, 1)".
std::string to_string(const RateVector& rates);

}  // namespace omni
