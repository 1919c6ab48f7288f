#include "polyspace/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "polyspace/error.hpp"

namespace polyspace {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt pow10(long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
  auto fail = [&] { return Error(ErrorCode::Parse, "not a number: '" + std::string(original) + "'"); };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) throw fail();
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw fail();
  if (!int_part.empty() && !all_digits(int_part)) throw fail();
  if (!frac_part.empty() && !all_digits(frac_part)) throw fail();
  BigInt digits{std::string(int_part) + std::string(frac_part) + (int_part.empty() && frac_part.empty() ? "0" : "")};
  exponent -= static_cast<long>(frac_part.size());
  Rational value = exponent >= 0 ? Rational(digits * pow10(exponent)) : Rational(digits, pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

RationalVector parse_rational_list(std::string_view csv) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(parse_rational(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_double(r));
  return out;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(scaled)};
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

Rational sum(const RationalVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

RationalVector normalize_perimeter(const RationalVector& alpha) {
  const Rational total = sum(alpha);
  if (total == 0) throw Error(ErrorCode::ZeroPolygon, "lengths sum to zero");
  RationalVector out;
  out.reserve(alpha.size());
  for (const auto& a : alpha) out.push_back(2 * a / total);
  return out;
}

}  // namespace polyspace
