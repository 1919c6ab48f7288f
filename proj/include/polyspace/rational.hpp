#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyspace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// Parses "3", "-2", "3/4", "0.125", "1.5e-3" exactly. Decimals become p/10^k.
/// Throws Error(Parse) on malformed input.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals.
RationalVector parse_rational_list(std::string_view csv);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);
std::vector<double> to_doubles(const RationalVector& v);

/// Exact rational value of a finite double.
Rational from_double(double x);

Rational sum(const RationalVector& v);

/// Scales so the entries sum to 2. Throws Error(ZeroPolygon) when they sum to 0.
RationalVector normalize_perimeter(const RationalVector& alpha);

}  // namespace polyspace
