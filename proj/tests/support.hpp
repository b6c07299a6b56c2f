#pragma once

#include <random>
#include <string>
#include <vector>

#include "omni/model.hpp"
#include "omni/model_io.hpp"
#include "omni/partition.hpp"

namespace omni::test {

inline std::string data_path(const std::string& name) { return std::string(OMNI_DATA_DIR) + "/" + name; }

inline const SourceModel& example1() {
  static const SourceModel model = read_model_file(data_path("example1.model"));
  return model;
}

inline Partition parts(std::initializer_list<std::initializer_list<int>> blocks) {
  std::vector<UserSet> out;
  UserSet carrier;
  for (auto b : blocks) {
    out.push_back(UserSet::of_ids(b));
    carrier |= out.back();
  }
  return Partition(carrier, out);
}

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

inline RateVector rates(std::initializer_list<Rational> values) { return RateVector(values); }

// Each user draws a nonempty random subset of `bits` named bits. About one
// model in four also gets a duplicated user, to exercise ties.
inline BitPoolSource random_bitpool(std::mt19937_64& rng, std::size_t users, std::size_t bits) {
  std::bernoulli_distribution keep(0.4);
  std::uniform_int_distribution<std::size_t> any_bit(0, bits - 1);
  std::vector<std::vector<std::string>> pool(users);
  for (auto& user : pool) {
    for (std::size_t b = 0; b < bits; ++b) {
      if (keep(rng)) user.push_back("w" + std::to_string(b));
    }
    if (user.empty()) user.push_back("w" + std::to_string(any_bit(rng)));
  }
  if (users > 2 && rng() % 4 == 0) pool[rng() % users] = pool[rng() % users];
  return BitPoolSource(pool);
}

inline SourceModel random_bitpool_model(std::mt19937_64& rng, std::size_t min_users, std::size_t max_users,
                                        std::size_t max_bits) {
  std::uniform_int_distribution<std::size_t> n(min_users, max_users);
  std::uniform_int_distribution<std::size_t> w(1, max_bits);
  const std::size_t users = n(rng);
  return SourceModel(random_bitpool(rng, users, w(rng)));
}

// Weighted coverage function with random rational weights: a polymatroid
// that is not integer valued.
inline SourceModel random_weighted_model(std::mt19937_64& rng, std::size_t users, std::size_t atoms) {
  std::uniform_int_distribution<long long> num(1, 12);
  std::uniform_int_distribution<long long> den(1, 4);
  std::vector<Rational> weight;
  std::vector<std::uint32_t> seen_by(atoms);
  for (std::size_t a = 0; a < atoms; ++a) {
    weight.emplace_back(num(rng), den(rng));
    seen_by[a] = static_cast<std::uint32_t>(rng() % ((1u << users) - 1)) + 1;
  }
  std::vector<Rational> table(std::size_t{1} << users);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    for (std::size_t a = 0; a < atoms; ++a) {
      if (seen_by[a] & mask) table[mask] += weight[a];
    }
  }
  // Every user needs positive entropy for the singleton checks to be meaningful.
  for (std::size_t u = 0; u < users; ++u) {
    if (table[std::size_t{1} << u] == 0) {
      for (std::size_t mask = 1; mask < table.size(); ++mask) {
        if (mask & (std::size_t{1} << u)) table[mask] += 1;
      }
    }
  }
  return SourceModel(EntropyTable(users, std::move(table)));
}

}  // namespace omni::test
