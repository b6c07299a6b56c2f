#include "omni/user_set.hpp"

#include "omni/errors.hpp"

namespace omni {

UserSet UserSet::of_ids(std::initializer_list<int> ids) {
  UserSet set;
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(kMaxUsers)) throw DomainError("user id out of range: " + std::to_string(id));
    set = set.with(static_cast<std::size_t>(id - 1));
  }
  return set;
}

std::vector<std::size_t> UserSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string to_string(UserSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t m : set.members()) {
    if (!first) out += ',';
    out += std::to_string(m + 1);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace omni
