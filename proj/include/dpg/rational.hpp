#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dpg {

// Exact rational arithmetic everywhere a cost, weight, or distance lives.
// Values are kept in lowest terms with positive denominator; equality is
// value equality. Magnitudes grow as needed (no precision cap).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num", "-num" or "num/den" (den > 0 after normalization).
Rational parse_rational(const std::string& text);

/// Renders as "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

/// Smallest integer >= q.
Int ceil_rational(const Rational& q);

}  // namespace dpg
