#pragma once

#include "hlmax/lattice.hpp"
#include "hlmax/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hlmax {

// (1 / (r + s + 1)) * sum_{j=-r}^{s} |f(n + j)|
Rational average(const LatticeFunction& f, std::int64_t n, std::int64_t r, std::int64_t s);

// Noncentered maximal function at n.
//
// A window that reaches past the hull of supp|f| ∪ {n} only adds zeros to a
// nonnegative sum, so the supremum over r, s >= 0 is attained by a window
// inside that hull; exactly those windows are enumerated. Mf = 0 for f = 0.
Rational maximal_at(const LatticeFunction& f, std::int64_t n);

enum class MaximalMethod { naive, fast };

/// Exact values of Mf on the window [a-1, b+1] around the support hull [a, b].
///
/// Outside the hull Mf has a closed form. For n >= b every optimal window
/// ends at n, so
///
///     Mf(n) = max_{a <= i <= b} S_i / (n - i + 1),   S_i = sum_{j >= i} |f(j)|,
///
/// a maximum of convex decreasing functions of n; mirrored on the left with
/// prefix sums. Hence Mf is convex on (-inf, a] and on [b, inf) and its
/// consecutive differences vanish at both ends. `at` evaluates this form
/// exactly anywhere outside the window.
class MaximalProfile {
 public:
  const LatticeFunction& source() const { return source_; }
  std::int64_t hull_first() const { return source_.first(); }
  std::int64_t hull_last() const { return source_.last(); }
  std::int64_t window_first() const { return source_.first() - 1; }
  std::int64_t window_last() const { return source_.last() + 1; }

  std::span<const Rational> values() const { return values_; }

  // Mf(n) for any integer n.
  Rational at(std::int64_t n) const;

  // Convexity outside the hull and vanishing differences; always established.
  bool tail_guarantee() const { return true; }

  friend bool operator==(const MaximalProfile&, const MaximalProfile&) = default;

 private:
  friend MaximalProfile build_profile(const LatticeFunction&, std::vector<Rational>);

  LatticeFunction source_;
  std::vector<Rational> values_;
  std::vector<Rational> prefix_;  // prefix_[k] = sum of |f| over [a, a+k)
};

// Naive enumeration over all windows; the reference implementation.
// Throws std::invalid_argument for the zero function.
MaximalProfile maximal_profile(const LatticeFunction& f);

// Maximum-density-segment sweep over prefix sums, O(W^2) for window width W.
// Produces the same profile as maximal_profile.
MaximalProfile maximal_profile_fast(const LatticeFunction& f);

MaximalProfile maximal_profile(const LatticeFunction& f, MaximalMethod method);

}  // namespace hlmax
