#include "omni/sfm.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "omni/errors.hpp"

namespace omni {

FusionOracle make_fusion_oracle(const SourceModel& model, const Rational& alpha, const Partition& q,
                                RateVector rates, std::size_t anchor_user) {
  FusionOracle oracle;
  oracle.blocks = q.blocks();
  const UserSet anchor = UserSet::single(anchor_user);
  auto it = std::find(oracle.blocks.begin(), oracle.blocks.end(), anchor);
  if (it == oracle.blocks.end()) {
    throw DomainError("anchor {" + std::to_string(anchor_user + 1) + "} is not a block of " + to_string(q));
  }
  for (std::size_t m : q.carrier().members()) {
    if (m >= rates.size()) throw DomainError("rate vector does not cover user " + std::to_string(m + 1));
  }
  oracle.anchor = static_cast<std::size_t>(it - oracle.blocks.begin());
  Rational offset = alpha - model.total();
  oracle.evaluate = [&model, offset, rates = std::move(rates)](UserSet fused) {
    Rational value = offset + model.entropy(fused);
    for (std::size_t m : fused.members()) value -= rates[m];
    return value;
  };
  return oracle;
}

namespace {

std::vector<std::size_t> free_blocks(const FusionOracle& oracle) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < oracle.blocks.size(); ++k) {
    if (k != oracle.anchor) out.push_back(k);
  }
  return out;
}

UserSet fuse(const FusionOracle& oracle, const std::vector<std::size_t>& free, std::uint64_t selection) {
  UserSet set = oracle.anchor_block();
  for (std::size_t k = 0; k < free.size(); ++k) {
    if ((selection >> k) & 1u) set |= oracle.blocks[free[k]];
  }
  return set;
}

}  // namespace

SfmResult minimize_brute(const FusionOracle& oracle) {
  const auto free = free_blocks(oracle);
  if (free.size() > kBruteForceMaxBlocks) {
    throw CapacityError("brute-force minimization limited to " + std::to_string(kBruteForceMaxBlocks) +
                        " free blocks, got " + std::to_string(free.size()));
  }
  std::optional<Rational> best;
  std::vector<UserSet> minimizers;
  const std::uint64_t count = std::uint64_t{1} << free.size();
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    UserSet set = fuse(oracle, free, sel);
    Rational value = oracle.evaluate(set);
    if (!best || value < *best) {
      best = value;
      minimizers.assign(1, set);
    } else if (value == *best) {
      minimizers.push_back(set);
    }
  }

  UserSet lo = minimizers.front();
  UserSet hi = minimizers.front();
  for (UserSet m : minimizers) {
    lo &= m;
    hi |= m;
  }
  // Submodular minimizers are closed under intersection and union.
  auto is_minimizer = [&](UserSet s) { return std::find(minimizers.begin(), minimizers.end(), s) != minimizers.end(); };
  if (!is_minimizer(lo) || !is_minimizer(hi)) {
    throw ConsistencyError("minimizers of the fusion function do not form a lattice (function not submodular?)");
  }
  return {*best, lo, hi};
}

namespace {

using Point = std::vector<Rational>;

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Solves the square system m * x = rhs by Gauss-Jordan elimination.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[row][c] -= factor * m[col][c];
      rhs[row] -= factor * rhs[col];
    }
  }
  for (std::size_t k = 0; k < n; ++k) rhs[k] /= m[k][k];
  return rhs;
}

// Weights mu (summing to 1) of the minimum-norm point in the affine hull.
std::vector<Rational> affine_minimizer(const std::vector<Point>& corral) {
  const std::size_t m = corral.size();
  std::vector<std::vector<Rational>> sys(m + 1, std::vector<Rational>(m + 1, 0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) sys[a][b] = sys[b][a] = dot(corral[a], corral[b]);
    sys[a][m] = 1;
    sys[m][a] = 1;
  }
  std::vector<Rational> rhs(m + 1, 0);
  rhs[m] = 1;
  auto sol = solve(std::move(sys), std::move(rhs));
  if (!sol) throw SolverError("min-norm-point corral is affinely dependent");
  sol->pop_back();
  return *sol;
}

}  // namespace

SfmResult minimize_mnp(const FusionOracle& oracle, std::size_t max_iterations) {
  const auto free = free_blocks(oracle);
  const std::size_t n = free.size();
  const UserSet anchor = oracle.anchor_block();
  const Rational base = oracle.evaluate(anchor);
  if (n == 0) return {base, anchor, anchor};

  auto h = [&](const std::vector<bool>& chosen) {
    UserSet s = anchor;
    for (std::size_t k = 0; k < n; ++k) {
      if (chosen[k]) s |= oracle.blocks[free[k]];
    }
    return oracle.evaluate(s) - base;
  };

  // Greedy vertex of the base polytope minimizing <x, .>.
  auto greedy = [&](const Point& x) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    Point q(n);
    std::vector<bool> chosen(n, false);
    Rational prev = 0;
    for (std::size_t e : order) {
      chosen[e] = true;
      Rational cur = h(chosen);
      q[e] = cur - prev;
      prev = cur;
    }
    return q;
  };

  std::vector<Point> corral{greedy(Point(n, 0))};
  std::vector<Rational> weights{1};
  Point x = corral.front();

  auto combination = [&](const std::vector<Rational>& w) {
    Point p(n, 0);
    for (std::size_t s = 0; s < corral.size(); ++s) {
      for (std::size_t k = 0; k < n; ++k) p[k] += w[s] * corral[s][k];
    }
    return p;
  };

  std::size_t iterations = 0;
  for (;;) {
    if (++iterations > max_iterations) throw SolverError("min-norm-point exceeded its iteration cap");
    Point q = greedy(x);
    if (dot(x, x) <= dot(x, q)) break;
    if (std::find(corral.begin(), corral.end(), q) != corral.end()) {
      throw SolverError("min-norm-point revisited a corral vertex");
    }
    corral.push_back(std::move(q));
    weights.push_back(0);

    for (;;) {
      if (++iterations > max_iterations) throw SolverError("min-norm-point exceeded its iteration cap");
      std::vector<Rational> mu = affine_minimizer(corral);
      if (std::all_of(mu.begin(), mu.end(), [](const Rational& v) { return v > 0; })) {
        weights = std::move(mu);
        x = combination(weights);
        break;
      }
      std::optional<Rational> theta;
      for (std::size_t s = 0; s < corral.size(); ++s) {
        if (mu[s] > 0) continue;
        Rational gap = weights[s] - mu[s];
        if (gap == 0) continue;
        Rational t = weights[s] / gap;
        if (!theta || t < *theta) theta = t;
      }
      if (!theta) throw SolverError("min-norm-point minor cycle made no progress");
      for (std::size_t s = 0; s < corral.size(); ++s) weights[s] = *theta * mu[s] + (1 - *theta) * weights[s];
      std::size_t keep = 0;
      for (std::size_t s = 0; s < corral.size(); ++s) {
        if (weights[s] > 0) {
          if (keep != s) {
            corral[keep] = std::move(corral[s]);
            weights[keep] = weights[s];
          }
          ++keep;
        }
      }
      corral.resize(keep);
      weights.resize(keep);
      if (corral.empty()) throw SolverError("min-norm-point corral emptied");
      x = combination(weights);
    }
  }

  std::vector<bool> negative(n), nonpositive(n);
  Rational negative_mass = 0;
  for (std::size_t k = 0; k < n; ++k) {
    negative[k] = x[k] < 0;
    nonpositive[k] = x[k] <= 0;
    if (negative[k]) negative_mass += x[k];
  }
  // Duality certificate: h(Y) >= x(Y) >= x^-(E) for every Y, so equality
  // proves both sets are minimizers.
  const Rational low_value = h(negative);
  if (low_value != negative_mass || h(nonpositive) != negative_mass) {
    throw SolverError("min-norm-point optimality certificate failed");
  }
  UserSet lo = anchor, hi = anchor;
  for (std::size_t k = 0; k < n; ++k) {
    if (negative[k]) lo |= oracle.blocks[free[k]];
    if (nonpositive[k]) hi |= oracle.blocks[free[k]];
  }
  return {base + low_value, lo, hi};
}

SfmResult minimize(const FusionOracle& oracle, SfmMethod method) {
  if (method == SfmMethod::brute_force) return minimize_brute(oracle);
  try {
    return minimize_mnp(oracle);
  } catch (const SolverError&) {
    return minimize_brute(oracle);
  }
}

}  // namespace omni
