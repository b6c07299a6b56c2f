#include "omni/model.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "omni/errors.hpp"

namespace omni {

BitPoolSource::BitPoolSource(const std::vector<std::vector<std::string>>& bits) {
  if (bits.size() > UserSet::kMaxUsers) {
    throw CapacityError("bit-pool models support at most " + std::to_string(UserSet::kMaxUsers) + " users");
  }
  std::map<std::string, std::size_t> index;
  for (const auto& user_bits : bits) {
    for (const auto& name : user_bits) {
      if (index.emplace(name, names_.size()).second) names_.push_back(name);
    }
  }
  const std::size_t words = (names_.size() + 63) / 64;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k].empty()) throw DomainError("user " + std::to_string(k + 1) + " observes no bits");
    std::vector<std::uint64_t> row(words, 0);
    for (const auto& name : bits[k]) {
      std::size_t b = index.at(name);
      row[b / 64] |= std::uint64_t{1} << (b % 64);
    }
    users_.push_back(std::move(row));
  }
}

std::vector<std::string> BitPoolSource::bits_of(std::size_t user) const {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < names_.size(); ++b) {
    if ((users_.at(user)[b / 64] >> (b % 64)) & 1u) out.push_back(names_[b]);
  }
  return out;
}

std::uint64_t BitPoolSource::entropy(UserSet set) const {
  std::uint64_t count = 0;
  const std::size_t words = (names_.size() + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t acc = 0;
    for (std::size_t m : set.members()) acc |= users_[m][w];
    count += static_cast<std::uint64_t>(std::popcount(acc));
  }
  return count;
}

EntropyTable::EntropyTable(std::size_t users, std::vector<Rational> values) : users_(users), values_(std::move(values)) {
  if (users > kMaxUsers) {
    throw CapacityError("entropy tables support at most " + std::to_string(kMaxUsers) + " users");
  }
  if (values_.size() != (std::size_t{1} << users)) {
    throw DomainError("entropy table needs exactly 2^|V| entries");
  }
  if (values_[0] != 0) throw DomainError("H(empty set) must be 0");
}

namespace {

std::size_t checked_size(std::size_t n) {
  if (n < 2) throw DomainError("ground set needs at least 2 users, got " + std::to_string(n));
  return n;
}

}  // namespace

SourceModel::SourceModel(BitPoolSource source) : source_(std::move(source)), size_(0) {
  size_ = checked_size(std::get<BitPoolSource>(source_).size());
  total_ = entropy(ground());
}

SourceModel::SourceModel(EntropyTable table) : source_(std::move(table)), size_(0) {
  size_ = checked_size(std::get<EntropyTable>(source_).size());
  total_ = entropy(ground());
}

void SourceModel::check_subset(UserSet set) const {
  if (!set.subset_of(ground())) {
    throw DomainError("subset " + to_string(set) + " is not contained in the ground set of " + std::to_string(size_) +
                      " users");
  }
}

Rational SourceModel::entropy(UserSet set) const {
  check_subset(set);
  if (set.empty()) return 0;
  return std::visit(
      [set](const auto& source) -> Rational {
        if constexpr (std::is_same_v<std::decay_t<decltype(source)>, BitPoolSource>) {
          return Rational(source.entropy(set));
        } else {
          return source.entropy(set);
        }
      },
      source_);
}

Rational SourceModel::conditional_entropy(UserSet x, UserSet y) const {
  check_subset(x);
  check_subset(y);
  return entropy(x | y) - entropy(y);
}

std::vector<Violation> SourceModel::validate() const {
  std::vector<Violation> out;
  const auto* table = std::get_if<EntropyTable>(&source_);
  if (table == nullptr) return out;

  // Local forms: H(X+a) >= H(X), and H(X+a) + H(X+b) >= H(X) + H(X+a+b)
  // for a, b outside X. Both imply the global conditions.
  const std::uint32_t full = ground().bits();
  for (std::uint32_t bits = 0; bits <= full; ++bits) {
    UserSet x(bits);
    const Rational& hx = table->entropy(x);
    for (std::size_t a = 0; a < size_; ++a) {
      if (x.contains(a)) continue;
      UserSet xa = x.with(a);
      const Rational& hxa = table->entropy(xa);
      if (hxa < hx) {
        out.push_back({Violation::Kind::monotonicity, x, xa,
                       "H" + to_string(x) + " = " + to_string(hx) + " exceeds H" + to_string(xa) + " = " +
                           to_string(hxa)});
      }
      for (std::size_t b = a + 1; b < size_; ++b) {
        if (x.contains(b)) continue;
        UserSet xb = x.with(b);
        UserSet xab = xa.with(b);
        const Rational& hxb = table->entropy(xb);
        const Rational& hxab = table->entropy(xab);
        if (hxa + hxb < hx + hxab) {
          out.push_back({Violation::Kind::submodularity, xa, xb,
                         "H" + to_string(xa) + " + H" + to_string(xb) + " = " + to_string(hxa + hxb) + " < H" +
                             to_string(x) + " + H" + to_string(xab) + " = " + to_string(hx + hxab)});
        }
      }
    }
  }
  return out;
}

Rational entropy_sum(const SourceModel& model, const std::vector<UserSet>& blocks) {
  Rational sum = 0;
  for (UserSet b : blocks) sum += model.entropy(b);
  return sum;
}

}  // namespace omni
