#pragma once

#include "hlmax/index_set.hpp"
#include "hlmax/lattice.hpp"
#include "hlmax/maximal.hpp"
#include "hlmax/rational.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hlmax {

/// A function on Z known exactly on [lo - 1, hi + 1] and known to be convex
/// (every point in S_+) outside [lo + 1, hi - 1], with consecutive
/// differences tending to 0 at both ends.
///
/// Under these conditions every infinite sum of |second differences| is
/// finite and its tails telescope:
///
///     sum_{n > hi} g''(n) = g(hi) - g(hi + 1),
///     sum_{n < lo} g''(n) = g(lo) - g(lo - 1).
class AnalyzedFunction {
 public:
  // Window [a-1, b+1] if f(a), f(b) >= 0, widened by one on a side where the
  // edge value is negative; [-1, 1] for the zero function.
  static AnalyzedFunction of(const LatticeFunction& f);
  // Window [a-1, b+1] of the profile.
  static AnalyzedFunction of(const MaximalProfile& profile);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }

  // Precondition: lo - 1 <= n <= hi + 1.
  const Rational& operator()(std::int64_t n) const;

  // g(n+1) + g(n-1) - 2 g(n); precondition: lo <= n <= hi.
  Rational central_second_difference(std::int64_t n) const;

 private:
  AnalyzedFunction(std::int64_t lo, std::int64_t hi, std::vector<Rational> padded);

  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<Rational> padded_;  // g on [lo - 1, hi + 1]
};

enum class PointClass { plus, minus };

std::string_view to_string(PointClass kind);

// Ties belong to S_+. Points outside the window are S_+ by construction.
PointClass classify(const AnalyzedFunction& g, std::int64_t n);

IndexSet s_minus(const AnalyzedFunction& g);

struct Boundaries {
  IndexSet left;   // n in S_-, n - 1 in S_+
  IndexSet right;  // n in S_-, n + 1 in S_+
};

Boundaries boundaries(const AnalyzedFunction& g);

struct Chain {
  PointClass kind;
  std::int64_t first;
  std::int64_t last;

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Maximal same-class runs partitioning [lo, hi]; kinds alternate.
std::vector<Chain> chains(const AnalyzedFunction& g);

struct ChainSums {
  Rational lhs;  // sum over the chain of |g(j+1) + g(j-1) - 2 g(j)|
  Rational rhs;  // telescoped +-(g(n-1) - g(n) - g(n+k) + g(n+k+1))
};

// Throws std::invalid_argument unless the chain lies in [lo, hi].
ChainSums chain_sum_check(const AnalyzedFunction& g, const Chain& chain);

// sum_{n in Z} |g(n+1) + g(n-1) - 2 g(n)|, exact (window part plus telescoped tails).
Rational second_norm(const AnalyzedFunction& g);

// 2 sum_{left boundary} (g(n) - g(n-1)) + 2 sum_{right boundary} (g(n) - g(n+1)).
// The limsup terms at infinity are 0 here and are omitted.
Rational funeq_rhs(const AnalyzedFunction& g);

// The same bound with each limit term bounded by 1, as done for M chi_A.
inline Rational funeq_rhs_paper_accounting(const AnalyzedFunction& g) { return funeq_rhs(g) + 2; }

struct DecompositionReport {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  IndexSet s_minus;
  IndexSet left_boundary;
  IndexSet right_boundary;
  std::vector<Chain> chains;
  Rational funeq_rhs_value;
  Rational second_norm;
};

DecompositionReport decompose(const AnalyzedFunction& g);

// Points of S_-(M chi_A) outside A. Concave points of M chi_A lie in A, so this is expected to be empty.
// Throws std::invalid_argument for empty A.
IndexSet lemma1_violations(const IndexSet& set, MaximalMethod method = MaximalMethod::naive);
IndexSet lemma1_violations(const IndexSet& set, const MaximalProfile& profile);

// For n with M chi_A(n) > M chi_A(n-1): the smallest s with
// M chi_A(n) = average(chi_A, n, 0, s). Mirror (r with average(chi_A, n, r, 0))
// for M chi_A(n) > M chi_A(n+1). nullopt when no such window exists.
std::optional<std::int64_t> right_window_witness(const MaximalProfile& profile, std::int64_t n);
std::optional<std::int64_t> left_window_witness(const MaximalProfile& profile, std::int64_t n);

struct RatioRecord {
  IndexSet set;
  Rational chi_second_norm;
  Rational max_second_norm;
  Rational ratio;
};

// Throws std::invalid_argument for empty A.
RatioRecord theorem1_report(const IndexSet& set, MaximalMethod method = MaximalMethod::naive);
RatioRecord theorem1_report(const IndexSet& set, const MaximalProfile& profile);

struct FirstDerivativeNorms {
  Rational chi;  // ||chi_A'||_1
  Rational max;  // ||(M chi_A)'||_1
};

// Throws std::invalid_argument for empty A.
FirstDerivativeNorms first_derivative_norms(const IndexSet& set,
                                            MaximalMethod method = MaximalMethod::naive);
FirstDerivativeNorms first_derivative_norms(const IndexSet& set, const MaximalProfile& profile);

// Total variation sum_n |Mf(n+1) - Mf(n)| with the monotone tails summed exactly.
Rational total_variation(const MaximalProfile& profile);

}  // namespace hlmax
