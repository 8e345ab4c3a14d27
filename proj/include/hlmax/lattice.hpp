#pragma once

#include "hlmax/index_set.hpp"
#include "hlmax/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace hlmax {

/// Finitely supported function Z -> Q.
///
/// Values are stored from `offset()` onwards with the support trimmed on
/// both ends, so two functions are equal exactly when their representations
/// are. The zero function has no stored values.
class LatticeFunction {
 public:
  LatticeFunction() = default;
  LatticeFunction(std::int64_t offset, std::vector<Rational> values);

  Rational operator()(std::int64_t n) const;

  bool is_zero() const { return values_.empty(); }
  // Support bounds; precondition: !is_zero().
  std::int64_t first() const { return offset_; }
  std::int64_t last() const { return offset_ + static_cast<std::int64_t>(values_.size()) - 1; }

  std::int64_t offset() const { return offset_; }
  std::span<const Rational> values() const { return values_; }

  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<Rational> values_;
};

LatticeFunction from_set(const IndexSet& set);
LatticeFunction from_integers(std::int64_t offset, std::span<const std::int64_t> values);

LatticeFunction absolute(const LatticeFunction& f);
LatticeFunction scaled(const LatticeFunction& f, const Rational& factor);
LatticeFunction translated(const LatticeFunction& f, std::int64_t shift);

// k-th forward difference, k >= 1. Throws std::invalid_argument for k == 0.
LatticeFunction forward_difference(const LatticeFunction& f, int k);

// f(n+1) + f(n-1) - 2 f(n)
Rational central_second_difference(const LatticeFunction& f, std::int64_t n);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

// Exponent of an l^p norm: a positive rational or infinity.
class Exponent {
 public:
  explicit Exponent(Rational p);
  static Exponent infinity();

  bool is_infinite() const { return infinite_; }
  const Rational& value() const { return p_; }

 private:
  Exponent() = default;
  Rational p_ = 0;
  bool infinite_ = true;
};

struct NormValue {
  bool exact = true;
  Rational exact_value;      // meaningful when exact
  HighPrecision approximate; // always populated
};

// Exact for p = 1 and p = infinity, a 50-digit approximation otherwise.
NormValue lp_norm(const LatticeFunction& f, const Exponent& p);

Rational l1_norm(const LatticeFunction& f);
Rational sup_norm(const LatticeFunction& f);

}  // namespace hlmax
