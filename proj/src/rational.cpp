#include "dpg/rational.hpp"

#include <stdexcept>

namespace dpg {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) {
      throw std::invalid_argument("rational denominator must be positive: " + text);
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/" + denominator(q).str();
  }
  return s;
}

Int ceil_rational(const Rational& q) {
  Int num = numerator(q);
  Int den = denominator(q);
  Int quot = num / den;
  if (num > 0 && num % den != 0) {
    ++quot;
  }
  return quot;
}

}  // namespace dpg
