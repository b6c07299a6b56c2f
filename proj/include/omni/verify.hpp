#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "omni/model.hpp"
#include "omni/par.hpp"
#include "omni/sfm.hpp"

namespace omni {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, or a short summary
};

// Strict strong map property of the fusion function of `user` over
// `state` (the PAR state for V_{user-1}): for alpha < alpha2 and fusion sets
// X strictly inside Y, f_alpha(Y) - f_alpha(X) > f_alpha2(Y) - f_alpha2(X).
// Draws `samples` random (alpha, alpha2, X, Y) quadruples. Returns the number
// of violations; the first one is described in *first_violation.
std::size_t strong_map_violations(const SourceModel& model, const ParState& state, std::size_t user,
                                  std::mt19937_64& rng, std::size_t samples, std::string* first_violation = nullptr);

// Nested minimizer chain: sets strictly grow with alpha, the first contains
// the user, and all stay inside V_user.
bool chain_is_nested(const MinimizerChain& chain, std::size_t user);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 32;  // per iteration, for the sampled checks
  SfmMethod method = SfmMethod::min_norm_point;
};

// Cross-checks PAR against MDA and the brute-force oracles. Needs |V| <= 8
// (CapacityError otherwise). Does not validate the model; call validate()
// first.
std::vector<CheckResult> verify_model(const SourceModel& model, const VerifyOptions& options = {});

}  // namespace omni
