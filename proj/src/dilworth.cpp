#include "omni/dilworth.hpp"

#include "omni/errors.hpp"

namespace omni {

Rational f_alpha(const SourceModel& model, const Rational& alpha, UserSet set) {
  if (set.empty()) return 0;
  return alpha - model.total() + model.entropy(set);
}

Rational partition_value(const SourceModel& model, const Rational& alpha, const Partition& p) {
  Rational sum = 0;
  for (UserSet b : p.blocks()) sum += f_alpha(model, alpha, b);
  return sum;
}

DilworthResult coord_sat_cap_fus(const SourceModel& model, const Rational& alpha, UserSet carrier,
                                 SfmMethod method) {
  if (alpha < 0 || alpha > model.total()) {
    throw DomainError("alpha = " + to_string(alpha) + " outside [0, H(V)] = [0, " + to_string(model.total()) + "]");
  }
  if (carrier.empty()) throw DomainError("coordinate saturation needs a nonempty carrier");
  if (!carrier.subset_of(model.ground())) throw DomainError("carrier " + to_string(carrier) + " is not inside V");

  const auto users = carrier.members();
  RateVector r(model.size(), alpha - model.total());
  r[users.front()] = f_alpha(model, alpha, UserSet::single(users.front()));
  Partition q = Partition::singletons(UserSet::single(users.front()));

  std::size_t calls = 0;
  for (std::size_t k = 1; k < users.size(); ++k) {
    const std::size_t user = users[k];
    q = q.with_singleton(user);
    FusionOracle oracle = make_fusion_oracle(model, alpha, q, r, user);
    SfmResult best = minimize(oracle, method);
    ++calls;
    r[user] += best.min_value;
    q = merge_blocks(q, best.minimal);
  }

  DilworthResult out{{}, std::move(q), 0, calls};
  for (std::size_t m : users) {
    out.rates.push_back(r[m]);
    out.truncation_value += r[m];
  }
  return out;
}

Rational dilworth_truncation(const SourceModel& model, const Rational& alpha, UserSet carrier, SfmMethod method) {
  return coord_sat_cap_fus(model, alpha, carrier, method).truncation_value;
}

}  // namespace omni
