#pragma once

// Test-only brute force for characteristic functions. Works on machine
// integers (window counts and lengths) and shares no code with the library's
// maximal function, profile, or tail evaluation.

#include "hlmax/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

class ChiOracle {
 public:
  explicit ChiOracle(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
  }

  // |A ∩ [i, j]|
  std::int64_t count(std::int64_t i, std::int64_t j) const {
    return std::upper_bound(elements_.begin(), elements_.end(), j) -
           std::lower_bound(elements_.begin(), elements_.end(), i);
  }

  // M chi_A(n) by enumerating every window [i, j] ∋ n inside hull(A ∪ {n}).
  hlmax::Rational maximal(std::int64_t n) const {
    const auto lo = std::min(elements_.front(), n);
    const auto hi = std::max(elements_.back(), n);
    std::int64_t best_num = 0;
    std::int64_t best_den = 1;
    for (auto i = lo; i <= n; ++i) {
      for (auto j = n; j <= hi; ++j) {
        const auto num = count(i, j);
        const auto den = j - i + 1;
        if (num * best_den > best_num * den) {
          best_num = num;
          best_den = den;
        }
      }
    }
    return hlmax::make_rational(best_num, best_den);
  }

  std::vector<hlmax::Rational> maximal_range(std::int64_t from, std::int64_t to) const {
    std::vector<hlmax::Rational> out;
    for (auto n = from; n <= to; ++n) out.push_back(maximal(n));
    return out;
  }

  struct Truncated {
    hlmax::Rational partial;    // sum_{|n| <= T} |M(n+1) + M(n-1) - 2 M(n)|
    hlmax::Rational remainder;  // telescoped tails beyond T
  };

  Truncated second_sum(std::int64_t T) const {
    const auto m = maximal_range(-T - 1, T + 1);
    const auto at = [&](std::int64_t n) -> const hlmax::Rational& {
      return m[static_cast<std::size_t>(n + T + 1)];
    };
    Truncated out;
    for (auto n = -T; n <= T; ++n) out.partial += abs(at(n + 1) + at(n - 1) - 2 * at(n));
    out.remainder = (at(T) - at(T + 1)) + (at(-T) - at(-T - 1));
    return out;
  }

  // sum_{-T <= n < T} |M(n+1) - M(n)|, remainder M(-T) + M(T).
  Truncated first_sum(std::int64_t T) const {
    const auto m = maximal_range(-T, T);
    Truncated out;
    for (std::size_t k = 0; k + 1 < m.size(); ++k) out.partial += abs(m[k + 1] - m[k]);
    out.remainder = m.front() + m.back();
    return out;
  }

  // sum_n |chi(n+1) + chi(n-1) - 2 chi(n)| over a range covering the support.
  std::int64_t chi_second_sum() const {
    std::int64_t total = 0;
    for (auto n = elements_.front() - 2; n <= elements_.back() + 2; ++n) {
      total += std::abs(count(n + 1, n + 1) + count(n - 1, n - 1) - 2 * count(n, n));
    }
    return total;
  }

 private:
  std::vector<std::int64_t> elements_;
};

}  // namespace oracle
