#include "hlmax/maximal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlmax {

Rational average(const LatticeFunction& f, std::int64_t n, std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0) throw std::invalid_argument("average: r and s must be nonnegative");
  Rational sum = 0;
  if (!f.is_zero()) {
    const auto from = std::max(n - r, f.first());
    const auto to = std::min(n + s, f.last());
    for (auto j = from; j <= to; ++j) sum += abs(f(j));
  }
  return sum / (r + s + 1);
}

Rational maximal_at(const LatticeFunction& f, std::int64_t n) {
  if (f.is_zero()) return 0;
  const auto lo = std::min(f.first(), n);
  const auto hi = std::max(f.last(), n);

  // prefix[k] = sum of |f| over [lo, lo + k)
  std::vector<Rational> prefix(static_cast<std::size_t>(hi - lo + 2));
  for (auto j = lo; j <= hi; ++j) {
    const auto k = static_cast<std::size_t>(j - lo);
    prefix[k + 1] = prefix[k] + abs(f(j));
  }

  Rational best = 0;
  for (auto i = lo; i <= n; ++i) {
    for (auto j = n; j <= hi; ++j) {
      const Rational sum =
          prefix[static_cast<std::size_t>(j - lo + 1)] - prefix[static_cast<std::size_t>(i - lo)];
      const Rational candidate = sum / (j - i + 1);
      if (candidate > best) best = candidate;
    }
  }
  return best;
}

MaximalProfile build_profile(const LatticeFunction& f, std::vector<Rational> values) {
  MaximalProfile profile;
  profile.source_ = f;
  profile.values_ = std::move(values);
  profile.prefix_.assign(f.values().size() + 1, Rational(0));
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    profile.prefix_[k + 1] = profile.prefix_[k] + abs(f.values()[k]);
  }
  return profile;
}

Rational MaximalProfile::at(std::int64_t n) const {
  if (n >= window_first() && n <= window_last()) {
    return values_[static_cast<std::size_t>(n - window_first())];
  }
  const auto a = hull_first();
  const auto width = static_cast<std::int64_t>(prefix_.size()) - 1;
  const Rational& total = prefix_.back();
  Rational best = 0;
  if (n > window_last()) {
    // Windows [i, n] with a <= i <= b.
    for (std::int64_t k = 0; k < width; ++k) {
      const Rational candidate = (total - prefix_[static_cast<std::size_t>(k)]) / (n - (a + k) + 1);
      if (candidate > best) best = candidate;
    }
  } else {
    // Windows [n, j] with a <= j <= b.
    for (std::int64_t k = 0; k < width; ++k) {
      const Rational candidate = prefix_[static_cast<std::size_t>(k + 1)] / ((a + k) - n + 1);
      if (candidate > best) best = candidate;
    }
  }
  return best;
}

MaximalProfile maximal_profile(const LatticeFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("maximal_profile: zero function");
  std::vector<Rational> values;
  values.reserve(f.values().size() + 2);
  for (auto n = f.first() - 1; n <= f.last() + 1; ++n) values.push_back(maximal_at(f, n));
  return build_profile(f, std::move(values));
}

MaximalProfile maximal_profile_fast(const LatticeFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("maximal_profile_fast: zero function");

  // Positions 0..W-1 cover the window [a-1, b+1]; prefix has W+1 entries.
  // Mf at position t is the steepest chord between prefix points x <= t < y.
  const auto width = f.values().size() + 2;
  const auto base = f.first() - 1;
  std::vector<Rational> prefix(width + 1);
  for (std::size_t t = 0; t < width; ++t) {
    prefix[t + 1] = prefix[t] + abs(f(base + static_cast<std::int64_t>(t)));
  }

  // best_from[x] = steepest chord from x to any y > t, for the current t.
  std::vector<Rational> best_from(width);
  std::vector<Rational> values(width);
  for (std::size_t t = width; t-- > 0;) {
    const std::size_t y = t + 1;
    Rational best = 0;
    for (std::size_t x = 0; x <= t; ++x) {
      const Rational slope = (prefix[y] - prefix[x]) / static_cast<std::int64_t>(y - x);
      if (slope > best_from[x]) best_from[x] = slope;
      if (best_from[x] > best) best = best_from[x];
    }
    values[t] = std::move(best);
  }
  return build_profile(f, std::move(values));
}

MaximalProfile maximal_profile(const LatticeFunction& f, MaximalMethod method) {
  return method == MaximalMethod::fast ? maximal_profile_fast(f) : maximal_profile(f);
}

}  // namespace hlmax
