#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sepindex {

using BigInt = boost::multiprecision::cpp_int;
/// Exact reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

/// Six significant digits, for humans only.
std::string to_decimal(const Rational& r);

/// Parses "num" or "num/den".
Rational parse_rational(const std::string& text);

}  // namespace sepindex
