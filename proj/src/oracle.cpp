#include "omni/oracle.hpp"

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"

namespace omni::oracle {

namespace {

void check_carrier(const SourceModel& model, UserSet carrier) {
  if (!carrier.subset_of(model.ground())) throw DomainError(to_string(carrier) + " is not inside V");
  if (carrier.size() > kMaxCarrier) {
    throw CapacityError("exhaustive search limited to " + std::to_string(kMaxCarrier) + " users, got " +
                        std::to_string(carrier.size()));
  }
}

// Meet of all optimizers; must itself be an optimizer.
Partition finest(const std::vector<Partition>& optimizers) {
  Partition m = optimizers.front();
  for (const auto& p : optimizers) m = meet(m, p);
  for (const auto& p : optimizers) {
    if (p == m) return m;
  }
  throw ConsistencyError("optimal partitions have no finest member");
}

}  // namespace

PartitionEnumeration::PartitionEnumeration(UserSet carrier) : members_(carrier.members()) {
  if (members_.size() > kMaxCarrier) {
    throw CapacityError("partition enumeration limited to " + std::to_string(kMaxCarrier) + " users");
  }
  growth_.assign(members_.size(), 0);
  prefix_max_.assign(members_.size(), 0);
  done_ = members_.empty();
}

std::optional<Partition> PartitionEnumeration::next() {
  if (done_) return std::nullopt;

  std::size_t labels = 0;
  for (std::size_t g : growth_) labels = std::max(labels, g + 1);
  std::vector<UserSet> blocks(labels);
  for (std::size_t k = 0; k < members_.size(); ++k) blocks[growth_[k]] = blocks[growth_[k]].with(members_[k]);
  UserSet carrier;
  for (std::size_t m : members_) carrier = carrier.with(m);
  Partition current(carrier, std::move(blocks));

  // Advance: a_k may grow up to max(a_0..a_{k-1}) + 1.
  std::size_t k = members_.size();
  while (k-- > 1) {
    if (growth_[k] <= prefix_max_[k - 1]) {
      ++growth_[k];
      prefix_max_[k] = std::max(prefix_max_[k - 1], growth_[k]);
      for (std::size_t j = k + 1; j < members_.size(); ++j) {
        growth_[j] = 0;
        prefix_max_[j] = prefix_max_[k];
      }
      return current;
    }
  }
  done_ = true;
  return current;
}

PartitionOptimum brute_min_sum_rate(const SourceModel& model, UserSet carrier) {
  check_carrier(model, carrier);
  if (carrier.size() < 2) throw DomainError("minimum sum-rate needs at least 2 users");
  const Rational h_carrier = model.entropy(carrier);

  std::optional<Rational> best;
  std::vector<Partition> optimizers;
  PartitionEnumeration all(carrier);
  while (auto p = all.next()) {
    if (p->size() < 2) continue;
    Rational value = 0;
    for (UserSet c : p->blocks()) value += h_carrier - model.entropy(c);
    value /= Rational(static_cast<long long>(p->size() - 1));
    if (!best || value > *best) {
      best = value;
      optimizers.assign(1, *p);
    } else if (value == *best) {
      optimizers.push_back(*p);
    }
  }
  return {*best, finest(optimizers)};
}

PartitionOptimum brute_dilworth(const SourceModel& model, const Rational& alpha, UserSet carrier) {
  check_carrier(model, carrier);
  if (carrier.empty()) throw DomainError("empty carrier");
  std::optional<Rational> best;
  std::vector<Partition> optimizers;
  PartitionEnumeration all(carrier);
  while (auto p = all.next()) {
    Rational value = partition_value(model, alpha, *p);
    if (!best || value < *best) {
      best = value;
      optimizers.assign(1, *p);
    } else if (value == *best) {
      optimizers.push_back(*p);
    }
  }
  return {*best, finest(optimizers)};
}

bool check_achievable(const SourceModel& model, const RateVector& rates, UserSet carrier) {
  const auto members = carrier.members();
  if (rates.size() != members.size()) throw DomainError("rate vector length does not match the carrier");
  if (members.size() > 30) throw CapacityError("achievability check limited to 30 users");
  const Rational h_carrier = model.entropy(carrier);
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t sel = 1; sel + 1 < count; ++sel) {
    UserSet x;
    Rational sum = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if ((sel >> k) & 1u) {
        x = x.with(members[k]);
        sum += rates[k];
      }
    }
    if (sum < h_carrier - model.entropy(carrier - x)) return false;
  }
  return true;
}

}  // namespace omni::oracle
