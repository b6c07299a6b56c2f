#include "omni/so.hpp"

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"
#include "omni/par.hpp"

namespace omni {

Rational lower_bound_alpha(const SourceModel& model) {
  Rational sum = 0;
  for (std::size_t m = 0; m < model.size(); ++m) sum += model.total() - model.entropy(UserSet::single(m));
  return sum / Rational(static_cast<long long>(model.size() - 1));
}

namespace {

std::optional<SOPlan> plan_from_state(const SourceModel& model, const ParState& state, const Rational& alpha_bar) {
  const Partition& at_bar = state.partitions.value_at(alpha_bar);
  UserSet subset;
  for (UserSet b : at_bar.blocks()) {
    if (b.size() > 1) {
      subset = b;
      break;
    }
  }
  if (subset.empty()) return std::nullopt;

  // C stays a block from alpha_bar down to the segment where its sub-blocks
  // merge; alpha_C is that segment's lower end.
  std::size_t k = state.partitions.locate(alpha_bar);
  while (k > 0 && state.partitions.value(k - 1).has_block(subset)) --k;
  const AlphaInterval iv = state.partitions.interval(k);
  if (!iv.lower_open) throw ConsistencyError("complimentary subset is a block at alpha = 0");
  const Rational alpha_c = iv.lower;

  RateVector all = evaluate(state.rates.value_at(alpha_c), alpha_c);
  SOPlan plan;
  plan.subset = subset;
  plan.local_alpha = alpha_c;
  for (std::size_t m : subset.members()) plan.local_rates.push_back(all[m]);
  plan.local_min_sum_rate = alpha_c - model.total() + model.entropy(subset);
  plan.found_at_iteration = state.users;
  plan.alpha_bar = alpha_bar;

  Rational sum = 0;
  for (const auto& r : plan.local_rates) sum += r;
  if (sum != plan.local_min_sum_rate) {
    throw ConsistencyError("local rates for " + to_string(subset) + " sum to " + to_string(sum) + ", expected " +
                           to_string(plan.local_min_sum_rate));
  }
  return plan;
}

}  // namespace

std::optional<SOPlan> find_complimentary(const SourceModel& model, const SOOptions& options) {
  const Rational alpha_bar = options.alpha_bar.value_or(lower_bound_alpha(model));
  if (alpha_bar < 0 || alpha_bar > model.total()) {
    throw DomainError("alpha_bar = " + to_string(alpha_bar) + " outside [0, H(V)]");
  }
  if (options.iteration && (*options.iteration < 2 || *options.iteration > model.size())) {
    throw DomainError("iteration must be between 2 and |V| = " + std::to_string(model.size()));
  }

  std::optional<SOPlan> found;
  ParState state = par_initial(model);
  while (state.users < model.size()) {
    state = par_iteration(model, state, options.method);
    if (options.iteration && state.users != *options.iteration) continue;
    found = plan_from_state(model, state, alpha_bar);
    if (found || options.iteration) break;
  }

  if (options.alpha_bar) {
    // Sufficiency needs alpha_bar <= R_CO(V); check after solving.
    while (state.users < model.size()) state = par_iteration(model, state, options.method);
    const Rational r_co = psp_of_prefix(model, state).min_sum_rate;
    if (alpha_bar > r_co) {
      throw DomainError("alpha_bar = " + to_string(alpha_bar) + " exceeds R_CO(V) = " + to_string(r_co) +
                        "; a complimentary subset is only certified for alpha_bar <= R_CO(V)");
    }
  }
  return found;
}

bool verify_complimentary(const SourceModel& model, UserSet subset, const Rational& alpha, SfmMethod method) {
  if (subset.size() < 2) throw DomainError("complimentary subsets have at least 2 users");
  if (subset == model.ground()) throw DomainError("a complimentary subset must be a strict subset of V");
  if (!subset.subset_of(model.ground())) throw DomainError(to_string(subset) + " is not inside V");
  return f_alpha(model, alpha, subset) == dilworth_truncation(model, alpha, subset, method);
}

RateDecomposition decompose_rates(const RateVector& global, const SOPlan& plan) {
  const auto members = plan.subset.members();
  if (members.size() != plan.local_rates.size()) throw DomainError("plan rates do not match its subset");
  if (!members.empty() && members.back() >= global.size()) {
    throw DomainError("global rate vector is shorter than the plan's subset requires");
  }
  RateDecomposition out;
  out.local.assign(global.size(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) out.local[members[k]] = plan.local_rates[k];
  out.residual.reserve(global.size());
  for (std::size_t k = 0; k < global.size(); ++k) {
    out.residual.push_back(global[k] - out.local[k]);
    if (out.residual.back() < 0) out.compatible = false;
  }
  return out;
}

}  // namespace omni
