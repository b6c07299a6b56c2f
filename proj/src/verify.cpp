#include "omni/verify.hpp"

#include <sstream>

#include "omni/dilworth.hpp"
#include "omni/errors.hpp"
#include "omni/oracle.hpp"
#include "omni/so.hpp"

namespace omni {

namespace {

Rational random_alpha(std::mt19937_64& rng, const Rational& top) {
  constexpr long long kDenominator = 97;
  std::uniform_int_distribution<long long> pick(0, kDenominator);
  return top * Rational(pick(rng), kDenominator);
}

UserSet random_union(std::mt19937_64& rng, const std::vector<UserSet>& blocks) {
  UserSet out;
  for (UserSet b : blocks) {
    if (rng() & 1u) out |= b;
  }
  return out;
}

// Probe points: every breakpoint, every segment midpoint, a few random ones.
std::vector<Rational> probe_alphas(const Segmented<Partition>& seg, std::mt19937_64& rng, std::size_t extra) {
  std::vector<Rational> out{Rational(0)};
  Rational lo = 0;
  for (const auto& u : seg.uppers()) {
    out.push_back((lo + u) / 2);
    out.push_back(u);
    lo = u;
  }
  for (std::size_t k = 0; k < extra; ++k) out.push_back(random_alpha(rng, seg.top()));
  return out;
}

class Report {
 public:
  explicit Report(std::string name) { result_.name = std::move(name); }

  template <class... Args>
  void fail(Args&&... parts) {
    ++failures_;
    if (!result_.passed) return;
    result_.passed = false;
    std::ostringstream os;
    (os << ... << parts);
    result_.detail = os.str();
  }
  void note(std::string text) { summary_ = std::move(text); }

  CheckResult done() {
    if (result_.passed) {
      result_.detail = summary_;
    } else if (failures_ > 1) {
      result_.detail += " (" + std::to_string(failures_) + " failures)";
    }
    return result_;
  }

 private:
  CheckResult result_;
  std::string summary_;
  std::size_t failures_ = 0;
};

}  // namespace

std::size_t strong_map_violations(const SourceModel& model, const ParState& state, std::size_t user,
                                  std::mt19937_64& rng, std::size_t samples, std::string* first_violation) {
  const Rational top = state.partitions.top();
  const UserSet anchor = UserSet::single(user);
  std::size_t violations = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Rational a = random_alpha(rng, top);
    Rational b = random_alpha(rng, top);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    FusionOracle lo = par_fusion_oracle(model, state, user, a);
    FusionOracle hi = par_fusion_oracle(model, state, user, b);
    // Unions of the coarser partition's blocks are fusions for both.
    UserSet y = random_union(rng, hi.blocks) | anchor;
    UserSet x = (random_union(rng, hi.blocks) & y) | anchor;
    if (x == y) {
      if (y == anchor) continue;
      // Drop one block so the pair is strict.
      for (UserSet blk : hi.blocks) {
        if (blk != anchor && blk.subset_of(y)) {
          x = y - blk;
          break;
        }
      }
    }
    const Rational gap_lo = lo.evaluate(y) - lo.evaluate(x);
    const Rational gap_hi = hi.evaluate(y) - hi.evaluate(x);
    if (!(gap_lo > gap_hi)) {
      if (violations == 0 && first_violation) {
        *first_violation = "X=" + to_string(x) + " Y=" + to_string(y) + " alpha=" + to_string(a) +
                           " alpha'=" + to_string(b) + ": " + to_string(gap_lo) + " <= " + to_string(gap_hi);
      }
      ++violations;
    }
  }
  return violations;
}

bool chain_is_nested(const MinimizerChain& chain, std::size_t user) {
  if (chain.sets.empty() || chain.sets.size() != chain.alphas.size()) return false;
  if (!chain.sets.front().contains(user)) return false;
  // The last set is V_user unless V_user only ties at the top.
  if (!chain.sets.back().subset_of(UserSet::prefix(user + 1))) return false;
  for (std::size_t k = 1; k < chain.sets.size(); ++k) {
    if (!(chain.alphas[k - 1] < chain.alphas[k])) return false;
    const UserSet a = chain.sets[k - 1];
    const UserSet b = chain.sets[k];
    if (a == b || !a.subset_of(b)) return false;
  }
  return true;
}

std::vector<CheckResult> verify_model(const SourceModel& model, const VerifyOptions& options) {
  if (model.size() > oracle::kMaxCarrier) {
    throw CapacityError("verify supports at most " + std::to_string(oracle::kMaxCarrier) + " users, got " +
                        std::to_string(model.size()));
  }
  std::mt19937_64 rng(options.seed);
  const UserSet ground = model.ground();

  std::vector<ParState> states{par_initial(model)};
  while (states.back().users < model.size()) states.push_back(par_iteration(model, states.back(), options.method));
  const ParState& final_state = states.back();
  const PSPResult psp = psp_of_prefix(model, final_state);
  const oracle::PartitionOptimum brute = oracle::brute_min_sum_rate(model, ground);

  std::vector<CheckResult> out;

  {
    Report r("par-vs-brute");
    if (psp.min_sum_rate != brute.value)
      r.fail("R_CO: PAR ", to_string(psp.min_sum_rate), ", brute ", to_string(brute.value));
    if (psp.finest_maximizer != brute.partition) {
      r.fail("finest maximizer: PAR ", to_string(psp.finest_maximizer), ", brute ", to_string(brute.partition));
    }
    r.note("R_CO = " + to_string(psp.min_sum_rate) + ", maximizer " + to_string(psp.finest_maximizer));
    out.push_back(r.done());
  }

  {
    Report r("par-vs-mda");
    const MdaResult mda = mda_reference(model, options.method);
    if (mda.min_sum_rate != psp.min_sum_rate) {
      r.fail("R_CO: PAR ", to_string(psp.min_sum_rate), ", MDA ", to_string(mda.min_sum_rate));
    }
    if (mda.partition != psp.finest_maximizer) {
      r.fail("partition: PAR ", to_string(psp.finest_maximizer), ", MDA ", to_string(mda.partition));
    }
    if (mda.rates != psp.optimal_rate_vector) {
      r.fail("rates: PAR ", to_string(psp.optimal_rate_vector), ", MDA ", to_string(mda.rates));
    }
    r.note("MDA rounds " + std::to_string(mda.rounds) + ", SFM calls MDA " + std::to_string(mda.sfm_calls) +
           " vs PAR " + std::to_string(final_state.total_sfm_calls));
    out.push_back(r.done());
  }

  {
    Report r("achievability");
    Rational sum = 0;
    for (const auto& x : psp.optimal_rate_vector) sum += x;
    if (sum != psp.min_sum_rate) r.fail("rate sum ", to_string(sum), " != R_CO ", to_string(psp.min_sum_rate));
    if (!oracle::check_achievable(model, psp.optimal_rate_vector)) {
      r.fail("rate vector ", to_string(psp.optimal_rate_vector), " violates a Slepian-Wolf constraint");
    }
    r.note("rates " + to_string(psp.optimal_rate_vector));
    out.push_back(r.done());
  }

  {
    Report r("prefix-psp");
    for (std::size_t k = 1; k < states.size(); ++k) {
      const UserSet prefix = UserSet::prefix(states[k].users);
      const PSPResult local = psp_of_prefix(model, states[k]);
      const oracle::PartitionOptimum want = oracle::brute_min_sum_rate(model, prefix);
      if (local.min_sum_rate != want.value || local.finest_maximizer != want.partition) {
        r.fail(to_string(prefix), ": PAR ", to_string(local.min_sum_rate), " ", to_string(local.finest_maximizer),
               ", brute ", to_string(want.value), " ", to_string(want.partition));
      }
      if (!oracle::check_achievable(model, local.optimal_rate_vector, prefix)) {
        r.fail(to_string(prefix), ": rates ", to_string(local.optimal_rate_vector), " not achievable");
      }
    }
    r.note(std::to_string(states.size() - 1) + " prefixes");
    out.push_back(r.done());
  }

  {
    Report r("segmented-vs-dilworth");
    std::size_t probes = 0;
    for (const ParState& st : states) {
      const UserSet carrier = UserSet::prefix(st.users);
      for (const Rational& alpha : probe_alphas(st.partitions, rng, options.samples / 4)) {
        ++probes;
        const Partition& p = st.partitions.value_at(alpha);
        const RateVector rates = evaluate(st.rates.value_at(alpha), alpha);
        const oracle::PartitionOptimum want = oracle::brute_dilworth(model, alpha, carrier);
        Rational sum = 0;
        for (const auto& x : rates) sum += x;
        if (p != want.partition || sum != want.value) {
          r.fail(to_string(carrier), " at alpha ", to_string(alpha), ": segmented ", to_string(sum), " ",
                 to_string(p), ", brute ", to_string(want.value), " ", to_string(want.partition));
        }
        const DilworthResult cscf = coord_sat_cap_fus(model, alpha, carrier, options.method);
        if (cscf.rates != rates || cscf.partition != p) {
          r.fail(to_string(carrier), " at alpha ", to_string(alpha), ": segmented rates ", to_string(rates),
                 ", saturation ", to_string(cscf.rates));
        }
      }
    }
    r.note(std::to_string(probes) + " probes");
    out.push_back(r.done());
  }

  {
    Report r("strong-map");
    std::size_t total = 0;
    for (std::size_t k = 0; k + 1 < states.size(); ++k) {
      std::string first;
      const std::size_t user = states[k].users;
      const std::size_t bad = strong_map_violations(model, states[k], user, rng, options.samples, &first);
      total += options.samples;
      if (bad > 0) r.fail("user ", user + 1, ": ", first);
    }
    r.note(std::to_string(total) + " sampled pairs");
    out.push_back(r.done());
  }

  {
    Report r("chain-nesting");
    for (std::size_t k = 1; k < states.size(); ++k) {
      const auto& it = states[k].last_iteration;
      if (!it || !chain_is_nested(it->chain, it->user)) {
        r.fail("iteration ", k + 1, ": minimizer chain not nested");
        continue;
      }
      // Each chain set is the minimal fusion minimizer on its segment.
      const Segmented<UserSet> seg = it->chain.segmented();
      for (std::size_t s = 0; s < seg.size(); ++s) {
        const AlphaInterval iv = seg.interval(s);
        for (const Rational& alpha : {iv.upper, (iv.lower + iv.upper) / 2}) {
          if (!iv.contains(alpha)) continue;
          const SfmResult best = minimize_brute(par_fusion_oracle(model, states[k - 1], it->user, alpha));
          if (best.minimal != seg.value(s)) {
            r.fail("iteration ", k + 1, " at alpha ", to_string(alpha), ": chain ", to_string(seg.value(s)),
                   ", brute ", to_string(best.minimal));
          }
        }
      }
    }
    out.push_back(r.done());
  }

  {
    Report r("complimentary-subset");
    const auto plan = find_complimentary(model, {std::nullopt, std::nullopt, options.method});
    if (!plan) {
      r.note("no complimentary subset at alpha_bar = " + to_string(lower_bound_alpha(model)));
    } else {
      const UserSet c = plan->subset;
      if (!verify_complimentary(model, c, plan->alpha_bar, options.method)) {
        r.fail(to_string(c), " fails f = f^ at alpha_bar ", to_string(plan->alpha_bar));
      }
      const oracle::PartitionOptimum local = oracle::brute_min_sum_rate(model, c);
      if (local.value != plan->local_min_sum_rate) {
        r.fail("R_CO", to_string(c), ": plan ", to_string(plan->local_min_sum_rate), ", brute ", to_string(local.value));
      }
      if (!oracle::check_achievable(model, plan->local_rates, c)) {
        r.fail("local rates ", to_string(plan->local_rates), " not achievable on ", to_string(c));
      }
      if (plan->alpha_bar > psp.min_sum_rate) {
        r.fail("alpha_bar ", to_string(plan->alpha_bar), " exceeds R_CO ", to_string(psp.min_sum_rate));
      }
      r.note(to_string(c) + " with R_CO(C) = " + to_string(plan->local_min_sum_rate));
    }
    out.push_back(r.done());
  }

  return out;
}

}  // namespace omni
