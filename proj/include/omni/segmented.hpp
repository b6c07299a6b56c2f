#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "omni/errors.hpp"
#include "omni/rational.hpp"

namespace omni {

// (lower, upper], or [lower, upper] when lower_open is false. Only the
// first segment of a tiling is closed below.
struct AlphaInterval {
  Rational lower;
  Rational upper;
  bool lower_open = true;

  bool contains(const Rational& alpha) const {
    return (lower_open ? alpha > lower : alpha >= lower) && alpha <= upper;
  }
  friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;
};

// "[0, 4]" or "(4, 10]".
inline std::string to_string(const AlphaInterval& iv) {
  return std::string(iv.lower_open ? "(" : "[") + to_string(iv.lower) + ", " + to_string(iv.upper) + "]";
}

// Piecewise-constant function of alpha over [0, top], tiled as
// [0, u_0], (u_0, u_1], ..., (u_{k-2}, u_{k-1} = top]. u_0 may be 0 (the
// degenerate closed point); every later segment has positive length.
// Adjacent segments always hold different values.
template <class T>
class Segmented {
 public:
  using value_type = T;

  // One segment [0, top].
  Segmented(Rational top, T value) {
    if (top < 0) throw DomainError("segmented range must end at a nonnegative alpha");
    uppers_.push_back(std::move(top));
    values_.push_back(std::move(value));
  }

  // Builds from segment upper ends and values; drops empty segments and
  // merges equal neighbours.
  static Segmented from_pieces(std::vector<Rational> uppers, std::vector<T> values) {
    if (uppers.empty() || uppers.size() != values.size()) {
      throw DomainError("segmented value needs one upper end per value");
    }
    if (uppers.front() < 0) throw DomainError("segment ends before alpha = 0");
    Segmented out(uppers.front(), std::move(values.front()));
    for (std::size_t k = 1; k < uppers.size(); ++k) {
      if (uppers[k] < out.uppers_.back()) throw DomainError("segment upper ends must be nondecreasing");
      if (uppers[k] == out.uppers_.back()) continue;  // empty (u, u]
      out.push_back(std::move(uppers[k]), std::move(values[k]));
    }
    return out;
  }

  std::size_t size() const { return values_.size(); }
  const Rational& top() const { return uppers_.back(); }
  const std::vector<Rational>& uppers() const { return uppers_; }
  const std::vector<T>& values() const { return values_; }
  const T& value(std::size_t k) const { return values_.at(k); }

  AlphaInterval interval(std::size_t k) const {
    if (k == 0) return {Rational(0), uppers_[0], false};
    return {uppers_.at(k - 1), uppers_.at(k), true};
  }

  // Index of the segment containing alpha.
  std::size_t locate(const Rational& alpha) const {
    if (alpha < 0 || alpha > top()) {
      throw DomainError("alpha = " + to_string(alpha) + " outside [0, " + to_string(top()) + "]");
    }
    auto it = std::lower_bound(uppers_.begin(), uppers_.end(), alpha);
    return static_cast<std::size_t>(it - uppers_.begin());
  }

  const T& value_at(const Rational& alpha) const { return values_[locate(alpha)]; }

  template <class F>
  auto map(F&& f) const -> Segmented<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<U> mapped;
    mapped.reserve(values_.size());
    for (const auto& v : values_) mapped.push_back(f(v));
    return Segmented<U>::from_pieces(uppers_, std::move(mapped));
  }

  // Same, with the segment's interval passed to f.
  template <class F>
  auto map_with_interval(F&& f) const
      -> Segmented<std::decay_t<std::invoke_result_t<F&, const AlphaInterval&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const AlphaInterval&, const T&>>;
    std::vector<U> mapped;
    mapped.reserve(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) mapped.push_back(f(interval(k), values_[k]));
    return Segmented<U>::from_pieces(uppers_, std::move(mapped));
  }

  friend bool operator==(const Segmented&, const Segmented&) = default;

 private:
  Segmented() = default;

  void push_back(Rational upper, T value) {
    if (value == values_.back()) {
      uppers_.back() = std::move(upper);
    } else {
      uppers_.push_back(std::move(upper));
      values_.push_back(std::move(value));
    }
  }

  std::vector<Rational> uppers_;
  std::vector<T> values_;
};

// Pointwise combination on the common refinement of two tilings of the same
// range. f(interval, a, b) is called once per refined segment.
template <class A, class B, class F>
auto combine(const Segmented<A>& a, const Segmented<B>& b, F&& f)
    -> Segmented<std::decay_t<std::invoke_result_t<F&, const AlphaInterval&, const A&, const B&>>> {
  using U = std::decay_t<std::invoke_result_t<F&, const AlphaInterval&, const A&, const B&>>;
  if (a.top() != b.top()) throw DomainError("combining segmented values over different ranges");
  std::vector<Rational> uppers;
  std::merge(a.uppers().begin(), a.uppers().end(), b.uppers().begin(), b.uppers().end(), std::back_inserter(uppers));
  uppers.erase(std::unique(uppers.begin(), uppers.end()), uppers.end());

  std::vector<U> values;
  values.reserve(uppers.size());
  for (std::size_t k = 0; k < uppers.size(); ++k) {
    AlphaInterval iv = k == 0 ? AlphaInterval{Rational(0), uppers[0], false} : AlphaInterval{uppers[k - 1], uppers[k], true};
    values.push_back(f(iv, a.value_at(uppers[k]), b.value_at(uppers[k])));
  }
  return Segmented<U>::from_pieces(std::move(uppers), std::move(values));
}

}  // namespace omni
