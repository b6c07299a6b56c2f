#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "omni/rational.hpp"
#include "omni/user_set.hpp"

namespace omni {

// Each user observes a set of independent uniform bits; H(X) is the number
// of distinct bits seen by the users in X.
class BitPoolSource {
 public:
  // bits[k] holds the bit names observed by user k (0-based).
  explicit BitPoolSource(const std::vector<std::vector<std::string>>& bits);

  std::size_t size() const { return users_.size(); }
  std::size_t universe_size() const { return names_.size(); }
  const std::vector<std::string>& bit_names() const { return names_; }
  // Names observed by `user`, in universe order.
  std::vector<std::string> bits_of(std::size_t user) const;

  std::uint64_t entropy(UserSet set) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint64_t>> users_;  // bitset over names_
};

// Explicit H(X) for every X; index is the subset mask, entry 0 must be 0.
class EntropyTable {
 public:
  static constexpr std::size_t kMaxUsers = 24;

  EntropyTable(std::size_t users, std::vector<Rational> values);

  std::size_t size() const { return users_; }
  const Rational& entropy(UserSet set) const { return values_[set.bits()]; }

 private:
  std::size_t users_;
  std::vector<Rational> values_;
};

struct Violation {
  enum class Kind { monotonicity, submodularity };
  Kind kind;
  // monotonicity: H(smaller) > H(larger).
  // submodularity: H(first) + H(second) < H(first & second) + H(first | second).
  UserSet first;
  UserSet second;
  std::string message;
};

// Ground set V = {1..|V|} plus an entropy oracle. Immutable.
class SourceModel {
 public:
  explicit SourceModel(BitPoolSource source);
  explicit SourceModel(EntropyTable table);

  std::size_t size() const { return size_; }
  UserSet ground() const { return UserSet::prefix(size_); }
  bool is_bit_pool() const { return std::holds_alternative<BitPoolSource>(source_); }
  const BitPoolSource* bit_pool() const { return std::get_if<BitPoolSource>(&source_); }

  // H(X); H(empty) = 0. Throws DomainError when X is not a subset of V.
  Rational entropy(UserSet set) const;
  // H(X | Y) = H(X u Y) - H(Y).
  Rational conditional_entropy(UserSet x, UserSet y) const;
  // H(V), cached.
  const Rational& total() const { return total_; }

  // Monotonicity and submodularity failures. Always empty for bit pools.
  std::vector<Violation> validate() const;

 private:
  void check_subset(UserSet set) const;

  std::variant<BitPoolSource, EntropyTable> source_;
  std::size_t size_;
  Rational total_;
};

// Sum of block entropies, H[P] for the blocks given.
Rational entropy_sum(const SourceModel& model, const std::vector<UserSet>& blocks);

}  // namespace omni
