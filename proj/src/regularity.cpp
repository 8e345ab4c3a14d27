#include "hlmax/regularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlmax {

AnalyzedFunction::AnalyzedFunction(std::int64_t lo, std::int64_t hi, std::vector<Rational> padded)
    : lo_(lo), hi_(hi), padded_(std::move(padded)) {
  // The window edges must already be convex points; everything beyond is
  // convex by the construction of the two factories.
  if (central_second_difference(lo_) < 0 || central_second_difference(hi_) < 0) {
    throw std::logic_error("AnalyzedFunction: window edge is not a convex point");
  }
}

AnalyzedFunction AnalyzedFunction::of(const LatticeFunction& f) {
  if (f.is_zero()) return AnalyzedFunction(-1, 1, std::vector<Rational>(5));
  // f''(a-1) = f(a): a-1 is convex exactly when f(a) >= 0.
  const auto lo = f.first() - (f(f.first()) >= 0 ? 1 : 2);
  const auto hi = f.last() + (f(f.last()) >= 0 ? 1 : 2);
  std::vector<Rational> padded;
  padded.reserve(static_cast<std::size_t>(hi - lo + 3));
  for (auto n = lo - 1; n <= hi + 1; ++n) padded.push_back(f(n));
  return AnalyzedFunction(lo, hi, std::move(padded));
}

AnalyzedFunction AnalyzedFunction::of(const MaximalProfile& profile) {
  const auto lo = profile.window_first();
  const auto hi = profile.window_last();
  std::vector<Rational> padded;
  padded.reserve(static_cast<std::size_t>(hi - lo + 3));
  padded.push_back(profile.at(lo - 1));
  for (const auto& v : profile.values()) padded.push_back(v);
  padded.push_back(profile.at(hi + 1));
  return AnalyzedFunction(lo, hi, std::move(padded));
}

const Rational& AnalyzedFunction::operator()(std::int64_t n) const {
  if (n < lo_ - 1 || n > hi_ + 1) throw std::out_of_range("AnalyzedFunction: outside padded window");
  return padded_[static_cast<std::size_t>(n - lo_ + 1)];
}

Rational AnalyzedFunction::central_second_difference(std::int64_t n) const {
  if (n < lo_ || n > hi_) throw std::out_of_range("AnalyzedFunction: second difference outside window");
  const auto& g = *this;
  return g(n + 1) + g(n - 1) - 2 * g(n);
}

std::string_view to_string(PointClass kind) { return kind == PointClass::plus ? "plus" : "minus"; }

PointClass classify(const AnalyzedFunction& g, std::int64_t n) {
  if (n < g.lo() || n > g.hi()) return PointClass::plus;
  return g.central_second_difference(n) >= 0 ? PointClass::plus : PointClass::minus;
}

IndexSet s_minus(const AnalyzedFunction& g) {
  std::vector<std::int64_t> out;
  for (auto n = g.lo(); n <= g.hi(); ++n) {
    if (classify(g, n) == PointClass::minus) out.push_back(n);
  }
  return IndexSet(std::move(out));
}

Boundaries boundaries(const AnalyzedFunction& g) {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;
  for (const auto n : s_minus(g)) {
    if (classify(g, n - 1) == PointClass::plus) left.push_back(n);
    if (classify(g, n + 1) == PointClass::plus) right.push_back(n);
  }
  return {IndexSet(std::move(left)), IndexSet(std::move(right))};
}

std::vector<Chain> chains(const AnalyzedFunction& g) {
  std::vector<Chain> out;
  for (auto n = g.lo(); n <= g.hi(); ++n) {
    const auto kind = classify(g, n);
    if (!out.empty() && out.back().kind == kind) {
      out.back().last = n;
    } else {
      out.push_back({kind, n, n});
    }
  }
  return out;
}

ChainSums chain_sum_check(const AnalyzedFunction& g, const Chain& chain) {
  if (chain.first > chain.last || chain.first < g.lo() || chain.last > g.hi()) {
    throw std::invalid_argument("chain_sum_check: chain lacks a one-point margin in the window");
  }
  ChainSums sums;
  for (auto j = chain.first; j <= chain.last; ++j) sums.lhs += abs(g.central_second_difference(j));
  const auto n = chain.first;
  const auto m = chain.last;
  sums.rhs = g(n - 1) - g(n) - g(m) + g(m + 1);
  if (chain.kind == PointClass::minus) sums.rhs = -sums.rhs;
  return sums;
}

Rational second_norm(const AnalyzedFunction& g) {
  Rational sum = 0;
  for (auto n = g.lo(); n <= g.hi(); ++n) sum += abs(g.central_second_difference(n));
  // Convex tails with vanishing differences telescope.
  sum += g(g.lo()) - g(g.lo() - 1);
  sum += g(g.hi()) - g(g.hi() + 1);
  return sum;
}

Rational funeq_rhs(const AnalyzedFunction& g) {
  const auto [left, right] = boundaries(g);
  Rational sum = 0;
  for (const auto n : left) sum += 2 * (g(n) - g(n - 1));
  for (const auto n : right) sum += 2 * (g(n) - g(n + 1));
  return sum;
}

DecompositionReport decompose(const AnalyzedFunction& g) {
  DecompositionReport report;
  report.lo = g.lo();
  report.hi = g.hi();
  report.s_minus = s_minus(g);
  auto [left, right] = boundaries(g);
  report.left_boundary = std::move(left);
  report.right_boundary = std::move(right);
  report.chains = chains(g);
  report.funeq_rhs_value = funeq_rhs(g);
  report.second_norm = second_norm(g);
  return report;
}

namespace {

void require_nonempty(const IndexSet& set, const char* what) {
  if (set.empty()) throw std::invalid_argument(std::string(what) + ": empty set");
}

}  // namespace

IndexSet lemma1_violations(const IndexSet& set, MaximalMethod method) {
  require_nonempty(set, "lemma1_violations");
  return lemma1_violations(set, maximal_profile(from_set(set), method));
}

IndexSet lemma1_violations(const IndexSet& set, const MaximalProfile& profile) {
  require_nonempty(set, "lemma1_violations");
  std::vector<std::int64_t> out;
  for (const auto n : s_minus(AnalyzedFunction::of(profile))) {
    if (!set.contains(n)) out.push_back(n);
  }
  return IndexSet(std::move(out));
}

std::optional<std::int64_t> right_window_witness(const MaximalProfile& profile, std::int64_t n) {
  const Rational value = profile.at(n);
  if (!(value > profile.at(n - 1))) return std::nullopt;
  const auto reach = std::max<std::int64_t>(profile.hull_last() - n, 0);
  for (std::int64_t s = 0; s <= reach; ++s) {
    if (average(profile.source(), n, 0, s) == value) return s;
  }
  return std::nullopt;
}

std::optional<std::int64_t> left_window_witness(const MaximalProfile& profile, std::int64_t n) {
  const Rational value = profile.at(n);
  if (!(value > profile.at(n + 1))) return std::nullopt;
  const auto reach = std::max<std::int64_t>(n - profile.hull_first(), 0);
  for (std::int64_t r = 0; r <= reach; ++r) {
    if (average(profile.source(), n, r, 0) == value) return r;
  }
  return std::nullopt;
}

RatioRecord theorem1_report(const IndexSet& set, MaximalMethod method) {
  require_nonempty(set, "theorem1_report");
  return theorem1_report(set, maximal_profile(from_set(set), method));
}

RatioRecord theorem1_report(const IndexSet& set, const MaximalProfile& profile) {
  require_nonempty(set, "theorem1_report");
  RatioRecord record;
  record.set = set;
  record.chi_second_norm = l1_norm(forward_difference(from_set(set), 2));
  record.max_second_norm = second_norm(AnalyzedFunction::of(profile));
  record.ratio = record.max_second_norm / record.chi_second_norm;
  return record;
}

Rational total_variation(const MaximalProfile& profile) {
  // Mf rises monotonically from 0 to Mf(a) on the left tail and decays
  // from Mf(b) to 0 on the right one.
  const auto a = profile.hull_first();
  const auto b = profile.hull_last();
  Rational sum = profile.at(a) + profile.at(b);
  for (auto n = a; n < b; ++n) sum += abs(profile.at(n + 1) - profile.at(n));
  return sum;
}

FirstDerivativeNorms first_derivative_norms(const IndexSet& set, MaximalMethod method) {
  require_nonempty(set, "first_derivative_norms");
  return first_derivative_norms(set, maximal_profile(from_set(set), method));
}

FirstDerivativeNorms first_derivative_norms(const IndexSet& set, const MaximalProfile& profile) {
  require_nonempty(set, "first_derivative_norms");
  return {l1_norm(forward_difference(from_set(set), 1)), total_variation(profile)};
}

}  // namespace hlmax
