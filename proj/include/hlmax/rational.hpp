#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hlmax {

// Exact rationals over GMP. Every value is kept in lowest terms with a
// positive denominator, so equality is representational.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1) {
  return Rational(Integer(numerator), Integer(denominator));
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p/q" or "p" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace hlmax
