#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace omni {

// Subset of the ground set as a 32-bit mask. Bit k is the user with 0-based
// index k; user ids in files and printed output are 1-based (bit k <-> id k+1).
class UserSet {
 public:
  static constexpr std::size_t kMaxUsers = 32;

  constexpr UserSet() = default;
  constexpr explicit UserSet(std::uint32_t bits) : bits_(bits) {}

  // {0, ..., n-1}, i.e. the prefix V_n.
  static constexpr UserSet prefix(std::size_t n) {
    return UserSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr UserSet single(std::size_t user) { return UserSet(std::uint32_t{1} << user); }
  // From 1-based ids, e.g. of_ids({1, 2, 5}).
  static UserSet of_ids(std::initializer_list<int> ids);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t user) const { return user < 32 && ((bits_ >> user) & 1u) != 0; }
  constexpr bool subset_of(UserSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(UserSet other) const { return (bits_ & other.bits_) != 0; }
  // Smallest member; undefined on the empty set.
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr UserSet with(std::size_t user) const { return UserSet(bits_ | (std::uint32_t{1} << user)); }
  constexpr UserSet without(std::size_t user) const { return UserSet(bits_ & ~(std::uint32_t{1} << user)); }

  friend constexpr UserSet operator|(UserSet a, UserSet b) { return UserSet(a.bits_ | b.bits_); }
  friend constexpr UserSet operator&(UserSet a, UserSet b) { return UserSet(a.bits_ & b.bits_); }
  friend constexpr UserSet operator-(UserSet a, UserSet b) { return UserSet(a.bits_ & ~b.bits_); }
  UserSet& operator|=(UserSet o) { bits_ |= o.bits_; return *this; }
  UserSet& operator&=(UserSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(UserSet, UserSet) = default;
  friend constexpr auto operator<=>(UserSet a, UserSet b) { return a.bits_ <=> b.bits_; }

  // Members in increasing order.
  std::vector<std::size_t> members() const;

 private:
  std::uint32_t bits_ = 0;
};

// "{1,2,5}" with 1-based ids; "{}" for the empty set.
std::string to_string(UserSet set);

}  // namespace omni
