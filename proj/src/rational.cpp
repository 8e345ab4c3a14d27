#include "hlmax/rational.hpp"

#include <stdexcept>

namespace hlmax {

std::string to_string(const Rational& value) { return value.str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace hlmax
