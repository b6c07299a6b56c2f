#include "omni/partition.hpp"

#include <algorithm>

#include "omni/errors.hpp"

namespace omni {

namespace {

void sort_blocks(std::vector<UserSet>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](UserSet a, UserSet b) { return a.lowest() < b.lowest(); });
}

}  // namespace

Partition::Partition(UserSet carrier, std::vector<UserSet> blocks) : carrier_(carrier), blocks_(std::move(blocks)) {
  UserSet seen;
  for (UserSet b : blocks_) {
    if (b.empty()) throw DomainError("partition has an empty block");
    if (b.intersects(seen)) throw DomainError("partition blocks overlap at " + to_string(b & seen));
    seen |= b;
  }
  if (seen != carrier_) {
    throw DomainError("blocks cover " + to_string(seen) + " but the carrier is " + to_string(carrier_));
  }
  sort_blocks(blocks_);
}

Partition Partition::singletons(UserSet carrier) {
  std::vector<UserSet> blocks;
  for (std::size_t m : carrier.members()) blocks.push_back(UserSet::single(m));
  return Partition(carrier, std::move(blocks));
}

Partition Partition::whole(UserSet carrier) {
  if (carrier.empty()) return Partition();
  return Partition(carrier, {carrier});
}

UserSet Partition::block_of(std::size_t user) const {
  for (UserSet b : blocks_) {
    if (b.contains(user)) return b;
  }
  throw DomainError("user " + std::to_string(user + 1) + " is not in the carrier " + to_string(carrier_));
}

bool Partition::has_block(UserSet block) const {
  return std::find(blocks_.begin(), blocks_.end(), block) != blocks_.end();
}

Partition Partition::with_singleton(std::size_t user) const {
  if (carrier_.contains(user)) throw DomainError("user " + std::to_string(user + 1) + " already in the carrier");
  std::vector<UserSet> blocks = blocks_;
  blocks.push_back(UserSet::single(user));
  return Partition(carrier_.with(user), std::move(blocks));
}

bool refines(const Partition& p, const Partition& q) {
  if (p.carrier() != q.carrier()) {
    throw DomainError("cannot compare partitions of " + to_string(p.carrier()) + " and " + to_string(q.carrier()));
  }
  for (UserSet b : p.blocks()) {
    if (!b.subset_of(q.block_of(b.lowest()))) return false;
  }
  return true;
}

Partition merge_blocks(const Partition& p, UserSet fused) {
  std::vector<UserSet> blocks;
  UserSet covered;
  for (UserSet b : p.blocks()) {
    if (b.subset_of(fused)) {
      covered |= b;
    } else if (b.intersects(fused)) {
      throw DomainError(to_string(fused) + " splits block " + to_string(b));
    } else {
      blocks.push_back(b);
    }
  }
  if (covered != fused) throw DomainError(to_string(fused) + " is not contained in the carrier");
  if (!fused.empty()) blocks.push_back(fused);
  return Partition(p.carrier(), std::move(blocks));
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.carrier() != q.carrier()) throw DomainError("meet of partitions with different carriers");
  std::vector<UserSet> blocks;
  for (UserSet a : p.blocks()) {
    for (UserSet b : q.blocks()) {
      if (a.intersects(b)) blocks.push_back(a & b);
    }
  }
  return Partition(p.carrier(), std::move(blocks));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (UserSet b : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += to_string(b);
  }
  return out;
}

AffineValue operator+(const AffineValue& a, const AffineValue& b) {
  return {a.intercept + b.intercept, a.slope + b.slope};
}

AffineValue operator-(const AffineValue& a, const AffineValue& b) {
  return {a.intercept - b.intercept, a.slope - b.slope};
}

RateVector evaluate(const AffineRateVector& rates, const Rational& alpha) {
  RateVector out;
  out.reserve(rates.size());
  for (const auto& r : rates) out.push_back(r.at(alpha));
  return out;
}

std::string to_string(const AffineValue& value) {
  const Rational& a = value.intercept;
  const Rational& b = value.slope;
  if (b == 0) return to_string(a);
  std::string out;
  if (b == 1) {
    out = "alpha";
  } else if (b == -1) {
    out = "-alpha";
  } else {
    out = to_string(b) + "*alpha";
  }
  if (a == 0) return out;
  // Lead with the constant when the slope is negative: "14 - 2*alpha".
  if (b < 0) {
    Rational mag = -b;
    return to_string(a) + " - " + (mag == 1 ? std::string("alpha") : to_string(mag) + "*alpha");
  }
  return a > 0 ? out + " + " + to_string(a) : out + " - " + to_string(Rational(-a));
}

std::string to_string(const RateVector& rates) {
  std::string out = "(";
  for (std::size_t k = 0; k < rates.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(rates[k]);
  }
  return out + ")";
}

}  // namespace omni
