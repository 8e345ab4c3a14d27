#include "hlmax/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlmax {

LatticeFunction::LatticeFunction(std::int64_t offset, std::vector<Rational> values)
    : offset_(offset), values_(std::move(values)) {
  const auto nonzero = [](const Rational& v) { return v != 0; };
  const auto head = std::find_if(values_.begin(), values_.end(), nonzero);
  if (head == values_.end()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  const auto tail = std::find_if(values_.rbegin(), values_.rend(), nonzero).base();
  values_.erase(tail, values_.end());
  offset_ += head - values_.begin();
  values_.erase(values_.begin(), head);
}

Rational LatticeFunction::operator()(std::int64_t n) const {
  if (n < offset_ || n - offset_ >= static_cast<std::int64_t>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(n - offset_)];
}

LatticeFunction from_set(const IndexSet& set) {
  if (set.empty()) return {};
  std::vector<Rational> values(static_cast<std::size_t>(set.max() - set.min() + 1));
  for (const auto n : set) values[static_cast<std::size_t>(n - set.min())] = 1;
  return LatticeFunction(set.min(), std::move(values));
}

LatticeFunction from_integers(std::int64_t offset, std::span<const std::int64_t> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto v : values) out.emplace_back(v);
  return LatticeFunction(offset, std::move(out));
}

LatticeFunction absolute(const LatticeFunction& f) {
  std::vector<Rational> out(f.values().begin(), f.values().end());
  for (auto& v : out) v = abs(v);
  return LatticeFunction(f.offset(), std::move(out));
}

LatticeFunction scaled(const LatticeFunction& f, const Rational& factor) {
  std::vector<Rational> out(f.values().begin(), f.values().end());
  for (auto& v : out) v *= factor;
  return LatticeFunction(f.offset(), std::move(out));
}

LatticeFunction translated(const LatticeFunction& f, std::int64_t shift) {
  return LatticeFunction(f.offset() + shift, {f.values().begin(), f.values().end()});
}

LatticeFunction forward_difference(const LatticeFunction& f, int k) {
  if (k < 1) throw std::invalid_argument("forward_difference: order must be at least 1");
  LatticeFunction g = f;
  for (int step = 0; step < k; ++step) {
    if (g.is_zero()) return g;
    // g'(n) = g(n+1) - g(n) is supported on [first - 1, last].
    std::vector<Rational> out;
    out.reserve(g.values().size() + 1);
    for (std::int64_t n = g.first() - 1; n <= g.last(); ++n) out.push_back(g(n + 1) - g(n));
    g = LatticeFunction(g.first() - 1, std::move(out));
  }
  return g;
}

Rational central_second_difference(const LatticeFunction& f, std::int64_t n) {
  return f(n + 1) + f(n - 1) - 2 * f(n);
}

Exponent::Exponent(Rational p) : p_(std::move(p)), infinite_(false) {
  if (p_ <= 0) throw std::invalid_argument("lp_norm: exponent must be positive");
}

Exponent Exponent::infinity() { return Exponent(); }

namespace {

HighPrecision to_high_precision(const Rational& value) {
  return HighPrecision(numerator(value)) / HighPrecision(denominator(value));
}

}  // namespace

Rational l1_norm(const LatticeFunction& f) {
  Rational sum = 0;
  for (const auto& v : f.values()) sum += abs(v);
  return sum;
}

Rational sup_norm(const LatticeFunction& f) {
  Rational best = 0;
  for (const auto& v : f.values()) best = std::max(best, Rational(abs(v)));
  return best;
}

NormValue lp_norm(const LatticeFunction& f, const Exponent& p) {
  NormValue out;
  if (p.is_infinite() || p.value() == 1) {
    out.exact_value = p.is_infinite() ? sup_norm(f) : l1_norm(f);
    out.approximate = to_high_precision(out.exact_value);
    return out;
  }
  out.exact = false;
  const HighPrecision exponent = to_high_precision(p.value());
  HighPrecision sum = 0;
  for (const auto& v : f.values()) sum += pow(to_high_precision(abs(v)), exponent);
  out.approximate = sum == 0 ? HighPrecision(0) : HighPrecision(pow(sum, 1 / exponent));
  return out;
}

}  // namespace hlmax
