#include "omni/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omni/errors.hpp"
#include "omni/model_io.hpp"
#include "omni/par.hpp"
#include "omni/so.hpp"
#include "omni/verify.hpp"

namespace omni::cli {

namespace {

struct Settings {
  std::string input = "-";
  bool decimal = false;
  std::string solver = "mnp";
  std::optional<std::size_t> prefix;
  std::optional<std::string> alpha_bar;
  std::uint64_t seed = 1;
  std::size_t samples = 32;
};

class Printer {
 public:
  explicit Printer(bool decimal) : decimal_(decimal) {}

  std::string num(const Rational& x) const { return decimal_ ? to_decimal(x) : to_string(x); }

  std::string rates(const RateVector& r) const {
    std::string out = "(";
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? ", " : "") + num(r[k]);
    return out + ")";
  }

  std::string interval(const AlphaInterval& iv) const {
    return std::string(iv.lower_open ? "(" : "[") + num(iv.lower) + ", " + num(iv.upper) + "]";
  }

 private:
  bool decimal_;
};

SfmMethod solver_of(const Settings& s) { return s.solver == "brute" ? SfmMethod::brute_force : SfmMethod::min_norm_point; }

SourceModel load(const Settings& s, std::istream& in) {
  SourceModel model = s.input == "-" ? read_model(in) : read_model_file(s.input);
  const auto violations = model.validate();
  if (!violations.empty()) {
    std::string msg = "model is not a valid entropy function:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw ModelFileError(0, msg);
  }
  return model;
}

ParState solve_prefix(const SourceModel& model, std::size_t users, SfmMethod method) {
  ParState state = par_initial(model);
  while (state.users < users) state = par_iteration(model, state, method);
  return state;
}

std::size_t prefix_or_all(const Settings& s, const SourceModel& model, std::size_t lowest) {
  const std::size_t i = s.prefix.value_or(model.size());
  if (i < lowest || i > model.size()) {
    throw DomainError("--prefix must be between " + std::to_string(lowest) + " and |V| = " +
                      std::to_string(model.size()));
  }
  return i;
}

int cmd_psp(const Settings& s, std::istream& in, std::ostream& out) {
  const SourceModel model = load(s, in);
  const Printer p(s.decimal);
  const std::size_t users = prefix_or_all(s, model, 2);
  const ParState state = solve_prefix(model, users, solver_of(s));
  const PSPResult psp = psp_of_prefix(model, state);
  const UserSet carrier = UserSet::prefix(users);

  out << "users: " << users;
  if (users < model.size()) out << " of " << model.size();
  out << "\nH(V) = " << p.num(model.entropy(carrier)) << "\n";
  out << "critical points:";
  for (std::size_t k = 0; k < psp.critical_points.size(); ++k) out << (k ? ", " : " ") << p.num(psp.critical_points[k]);
  out << "\nsegments:\n";
  for (std::size_t k = 0; k < psp.partitions.size(); ++k) {
    out << "  " << p.interval(psp.partitions.interval(k)) << "  " << to_string(psp.partitions.value(k)) << "\n";
  }
  out << "R_CO = " << p.num(psp.min_sum_rate) << "\n";
  out << "finest maximizer: " << to_string(psp.finest_maximizer) << "\n";
  out << "optimal rate vector: " << p.rates(psp.optimal_rate_vector) << "\n";
  out << "sfm calls: " << state.total_sfm_calls << "\n";
  return kOk;
}

int cmd_truncation_csv(const Settings& s, std::istream& in, std::ostream& out) {
  const SourceModel model = load(s, in);
  const Printer p(s.decimal);
  const std::size_t users = prefix_or_all(s, model, 1);
  const ParState state = solve_prefix(model, users, solver_of(s));

  out << "alpha_lo,alpha_hi,slope,intercept,partition\n";
  for (std::size_t k = 0; k < state.partitions.size(); ++k) {
    const AlphaInterval iv = state.partitions.interval(k);
    const Partition& part = state.partitions.value(k);
    const Rational slope(static_cast<long long>(part.size()));
    const Rational intercept = entropy_sum(model, part.blocks()) - slope * model.total();
    out << p.num(iv.lower) << "," << p.num(iv.upper) << "," << p.num(slope) << "," << p.num(intercept) << ",\""
        << to_string(part) << "\"\n";
  }
  return kOk;
}

int cmd_so(const Settings& s, std::istream& in, std::ostream& out) {
  const SourceModel model = load(s, in);
  const Printer p(s.decimal);
  SOOptions options;
  options.method = solver_of(s);
  if (s.alpha_bar) {
    try {
      options.alpha_bar = parse_rational(*s.alpha_bar);
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("--alpha-bar: ") + e.what());
    }
  }
  if (s.prefix) options.iteration = prefix_or_all(s, model, 2);

  const auto plan = find_complimentary(model, options);
  out << "alpha_bar = " << p.num(options.alpha_bar.value_or(lower_bound_alpha(model))) << "\n";
  if (!plan) {
    out << "no complimentary subset\n";
    return kOk;
  }
  out << "complimentary subset: " << to_string(plan->subset) << "\n";
  out << "found at iteration: " << plan->found_at_iteration << "\n";
  out << "alpha_C = " << p.num(plan->local_alpha) << "\n";
  out << "local rate vector: " << p.rates(plan->local_rates) << "\n";
  out << "R_CO(C) = " << p.num(plan->local_min_sum_rate) << "\n";
  return kOk;
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
  const SourceModel model = load(s, in);
  VerifyOptions options;
  options.seed = s.seed;
  options.samples = s.samples;
  options.method = solver_of(s);
  const auto results = verify_model(model, options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    if (!r.passed) ++failed;
  }
  if (failed) {
    out << failed << " of " << results.size() << " checks failed\n";
    return kCheckFailed;
  }
  out << "all " << results.size() << " checks passed\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal sequence of partitions and minimum sum-rate omniscience"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("model", s.input, "model file, or - for standard input");
    cmd->add_flag("--decimal", s.decimal, "print rationals as 6-digit decimals");
    cmd->add_option("--solver", s.solver, "submodular minimizer")->check(CLI::IsMember({"mnp", "brute"}));
  };

  CLI::App* psp = app.add_subcommand("psp", "critical points, partition chain, R_CO and an optimal rate vector");
  add_common(psp);
  psp->add_option("--prefix", s.prefix, "restrict to users 1..i");

  CLI::App* csv = app.add_subcommand("truncation-csv", "Dilworth truncation segments of users 1..i as CSV");
  add_common(csv);
  csv->add_option("--prefix", s.prefix, "restrict to users 1..i (default all)");

  CLI::App* so = app.add_subcommand("so", "complimentary subset for successive omniscience");
  add_common(so);
  so->add_option("--alpha-bar", s.alpha_bar, "override the lower bound on R_CO(V)");
  so->add_option("--prefix", s.prefix, "only inspect the state after adding user i");

  CLI::App* verify = app.add_subcommand("verify", "cross-check against brute-force oracles (|V| <= 8)");
  add_common(verify);
  verify->add_option("--seed", s.seed, "seed for the sampled checks");
  verify->add_option("--samples", s.samples, "samples per iteration")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (psp->parsed()) return cmd_psp(s, in, out);
    if (csv->parsed()) return cmd_truncation_csv(s, in, out);
    if (so->parsed()) return cmd_so(s, in, out);
    return cmd_verify(s, in, out);
  } catch (const ModelFileError& e) {
    err << "invalid model: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace omni::cli
