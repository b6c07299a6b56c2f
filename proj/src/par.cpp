#include "omni/par.hpp"

#include <algorithm>
#include <functional>

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"

namespace omni {

namespace {

void check_next_user(const SourceModel& model, const ParState& state, std::size_t user) {
  if (user != state.users) {
    throw DomainError("the next user to add is " + std::to_string(state.users + 1) + ", not " +
                      std::to_string(user + 1));
  }
  if (user >= model.size()) throw DomainError("all users have already been added");
}

Rational block_entropy_sum(const SourceModel& model, const Partition& p) {
  return entropy_sum(model, p.blocks());
}

}  // namespace

ParState par_initial(const SourceModel& model) {
  const UserSet first = UserSet::single(0);
  AffineValue r1{model.entropy(first) - model.total(), 1};
  return ParState{1, Segmented<Partition>(model.total(), Partition::singletons(first)),
                  Segmented<AffineRateVector>(model.total(), AffineRateVector{r1}), std::nullopt, 0};
}

FusionOracle par_fusion_oracle(const SourceModel& model, const ParState& state, std::size_t user,
                               const Rational& alpha) {
  check_next_user(model, state, user);
  Partition q = state.partitions.value_at(alpha).with_singleton(user);
  RateVector r = evaluate(state.rates.value_at(alpha), alpha);
  r.push_back(alpha - model.total());
  return make_fusion_oracle(model, alpha, q, std::move(r), user);
}

StrMapOutcome str_map(const SourceModel& model, const ParState& state, std::size_t user, const Partition& down,
                      const Partition& up, SfmMethod method) {
  check_next_user(model, state, user);
  const UserSet carrier = UserSet::prefix(user + 1);
  if (down.carrier() != carrier || up.carrier() != carrier) {
    throw DomainError("strong-map search needs partitions of " + to_string(carrier));
  }
  if (down == up || !refines(down, up)) {
    throw DomainError(to_string(down) + " is not strictly finer than " + to_string(up));
  }

  StrMapOutcome out;
  std::function<void(const Partition&, const Partition&)> search = [&](const Partition& pd, const Partition& pu) {
    const Rational slope(static_cast<long long>(pd.size() - pu.size()));
    const Rational alpha = model.total() - (block_entropy_sum(model, pd) - block_entropy_sum(model, pu)) / slope;
    FusionOracle oracle = par_fusion_oracle(model, state, user, alpha);
    SfmResult best = minimize(oracle, method);
    ++out.sfm_calls;
    Partition q = state.partitions.value_at(alpha).with_singleton(user);
    Partition p = merge_blocks(q, best.minimal);
    out.probes.push_back({alpha, pd, pu, best.minimal, p});
    if (p == pd) {
      if (std::find(out.fused.begin(), out.fused.end(), best.minimal) == out.fused.end()) {
        out.fused.push_back(best.minimal);
      }
      return;
    }
    if (!refines(pd, p) || p == pu || !refines(p, pu)) {
      throw ConsistencyError("strong-map probe at alpha = " + to_string(alpha) + " gave " + to_string(p) +
                             ", not strictly between " + to_string(pd) + " and " + to_string(pu));
    }
    search(pd, p);
    search(p, pu);
  };
  search(down, up);

  std::sort(out.fused.begin(), out.fused.end(), [](UserSet a, UserSet b) { return a.size() < b.size(); });
  return out;
}

MinimizerChain solve_critical_alphas(const SourceModel& model, const ParState& state, std::size_t user,
                                     std::vector<UserSet> sets) {
  check_next_user(model, state, user);
  const UserSet prefix = UserSet::prefix(user + 1);
  if (sets.empty() || sets.front() != UserSet::single(user)) {
    throw DomainError("minimizer chain must start at {" + std::to_string(user + 1) + "}");
  }
  if (sets.back() != prefix) sets.push_back(prefix);
  for (std::size_t k = 1; k < sets.size(); ++k) {
    if (sets[k - 1] == sets[k] || !sets[k - 1].subset_of(sets[k])) {
      throw DomainError("minimizer chain is not strictly nested at " + to_string(sets[k]));
    }
  }
  if (!prefix.subset_of(model.ground()) || !sets.back().subset_of(prefix)) {
    throw DomainError("minimizer chain leaves V_" + std::to_string(user + 1));
  }

  // Lowest alpha in [0, bound] with sum_{m in diff} r_{alpha,m} = target.
  auto lowest_root = [&](UserSet diff, const Rational& target, const Rational& bound) -> Rational {
    for (std::size_t k = 0; k < state.rates.size(); ++k) {
      const AlphaInterval iv = state.rates.interval(k);
      if (iv.lower_open ? iv.lower >= bound : iv.lower > bound) break;
      AffineValue sum{0, 0};
      for (std::size_t m : diff.members()) sum = sum + state.rates.value(k).at(m);
      if (sum.slope == 0) {
        if (sum.intercept == target) return iv.lower;
        continue;
      }
      Rational root = (target - sum.intercept) / sum.slope;
      if (iv.contains(root) && root <= bound) return root;
    }
    throw ConsistencyError("no critical value for the step to " + to_string(diff) + " below " + to_string(bound));
  };

  // Solve top-down: alpha_j lies below alpha_{j-1}.
  std::vector<Rational> alphas(sets.size());
  alphas.back() = model.total();
  std::vector<bool> keep(sets.size(), true);
  std::size_t upper = sets.size() - 1;
  for (std::size_t k = sets.size() - 1; k-- > 0;) {
    const UserSet diff = sets[upper] - sets[k];
    const Rational target = model.entropy(sets[upper]) - model.entropy(sets[k]);
    Rational root = lowest_root(diff, target, alphas[upper]);
    if (root == alphas[upper]) {
      // sets[upper] owns an empty interval.
      if (upper != sets.size() - 1 || k != sets.size() - 2) {
        throw ConsistencyError("minimizer " + to_string(sets[upper]) + " found but never selected");
      }
      keep[upper] = false;
    }
    alphas[k] = root;
    upper = k;
  }

  MinimizerChain chain;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (!keep[k]) continue;
    chain.alphas.push_back(alphas[k]);
    chain.sets.push_back(sets[k]);
  }
  return chain;
}

ParState par_iteration(const SourceModel& model, const ParState& state, SfmMethod method) {
  const std::size_t user = state.users;
  check_next_user(model, state, user);
  const UserSet prefix = UserSet::prefix(user + 1);

  StrMapOutcome search = str_map(model, state, user, Partition::singletons(prefix), Partition::whole(prefix), method);
  MinimizerChain chain = solve_critical_alphas(model, state, user, search.fused);
  const Segmented<UserSet> fused = chain.segmented();

  const Rational h_total = model.total();
  auto extended_partitions = state.partitions.map([user](const Partition& p) { return p.with_singleton(user); });
  auto extended_rates = state.rates.map([&](const AffineRateVector& r) {
    AffineRateVector out = r;
    out.push_back({-h_total, 1});
    return out;
  });

  auto partitions = combine(extended_partitions, fused,
                            [](const AlphaInterval&, const Partition& p, UserSet u) { return merge_blocks(p, u); });
  auto rates = combine(extended_rates, fused, [&](const AlphaInterval&, const AffineRateVector& r, UserSet u) {
    // r_i + f~(U) = f_alpha(U) - r(U \ {i})
    AffineValue updated{model.entropy(u) - h_total, 1};
    for (std::size_t m : u.without(user).members()) updated = updated - r[m];
    AffineRateVector out = r;
    out[user] = updated;
    return out;
  });

  IterationReport report{user, std::move(chain), std::move(search.probes), search.sfm_calls};
  const std::size_t total = state.total_sfm_calls + report.sfm_calls;
  return ParState{user + 1, std::move(partitions), std::move(rates), std::move(report), total};
}

namespace {

PSPResult extract_psp(Segmented<Partition> partitions, Segmented<AffineRateVector> rates, UserSet carrier) {
  const std::size_t top = partitions.size() - 1;
  std::size_t maximizer = top;
  if (partitions.value(top) == Partition::whole(carrier)) {
    if (top == 0) throw ConsistencyError("segmented partition is a single block from alpha = 0");
    maximizer = top - 1;
  }
  Rational min_sum_rate = partitions.uppers()[maximizer];
  RateVector optimal = evaluate(rates.value_at(min_sum_rate), min_sum_rate);
  return PSPResult{partitions.uppers(), partitions.values(), min_sum_rate, partitions.value(maximizer),
                   std::move(optimal), std::move(partitions), std::move(rates)};
}

// Shift alpha' = alpha + delta (delta <= 0) and clip to alpha' >= 0.
template <class T, class F>
Segmented<T> shift_segments(const Segmented<T>& seg, const Rational& delta, F&& transform) {
  std::vector<Rational> uppers;
  std::vector<T> values;
  for (std::size_t k = 0; k < seg.size(); ++k) {
    Rational u = seg.uppers()[k] + delta;
    if (u < 0) continue;
    uppers.push_back(std::move(u));
    values.push_back(transform(seg.value(k)));
  }
  return Segmented<T>::from_pieces(std::move(uppers), std::move(values));
}

}  // namespace

PSPResult psp_of_prefix(const SourceModel& model, const ParState& state) {
  if (state.users < 2) throw DomainError("the PSP needs a prefix of at least 2 users");
  const UserSet prefix = UserSet::prefix(state.users);
  const Rational delta = model.entropy(prefix) - model.total();
  auto partitions = shift_segments(state.partitions, delta, [](const Partition& p) { return p; });
  // a + b*alpha = a + b*(alpha' - delta)
  auto rates = shift_segments(state.rates, delta, [&](const AffineRateVector& r) {
    AffineRateVector out;
    out.reserve(r.size());
    for (const auto& v : r) out.push_back({v.intercept - v.slope * delta, v.slope});
    return out;
  });
  return extract_psp(std::move(partitions), std::move(rates), prefix);
}

ParRun run_par(const SourceModel& model, SfmMethod method) {
  ParState state = par_initial(model);
  while (state.users < model.size()) state = par_iteration(model, state, method);
  PSPResult psp = extract_psp(state.partitions, state.rates, model.ground());
  return ParRun{std::move(state), std::move(psp)};
}

MdaResult mda_reference(const SourceModel& model, SfmMethod method) {
  const UserSet ground = model.ground();
  Partition p = Partition::singletons(ground);
  MdaResult out{0, p, {}, 0, 0};
  for (std::size_t round = 0; round <= model.size(); ++round) {
    const Rational parts(static_cast<long long>(p.size() - 1));
    const Rational alpha = model.total() - (entropy_sum(model, p.blocks()) - model.total()) / parts;
    DilworthResult step = coord_sat_cap_fus(model, alpha, ground, method);
    out.rounds = round + 1;
    out.sfm_calls += step.sfm_calls;
    if (step.partition == p) {
      out.min_sum_rate = alpha;
      out.partition = std::move(step.partition);
      out.rates = std::move(step.rates);
      return out;
    }
    if (step.partition.size() < 2) {
      throw ConsistencyError("MDA reached the single-block partition at alpha = " + to_string(alpha));
    }
    p = std::move(step.partition);
  }
  throw ConsistencyError("MDA did not converge within |V| + 1 rounds");
}

}  // namespace omni
