#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace weylclifford {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational &q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational &q) { return boost::multiprecision::denominator(q); }

// Always "p/q" with q >= 1, e.g. "3/1", "-1/2", "0/1".
inline std::string to_fraction_string(const Rational &q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p". No decimal points.
inline Rational parse_fraction(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer(text)) throw ParseError("bad fraction: " + std::string(text));
    return Rational(to_int(text));
  }
  auto num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den))
    throw ParseError("bad fraction: " + std::string(text));
  BigInt d = to_int(den);
  if (d == 0) throw ParseError("zero denominator: " + std::string(text));
  return Rational(to_int(num), d);
}

inline Rational rational_pow(const Rational &q, long p) {
  if (p < 0) {
    if (q == 0) throw DivisionByZero();
    return rational_pow(1 / q, -p);
  }
  Rational r = 1;
  for (long i = 0; i < p; ++i) r *= q;
  return r;
}

inline double to_double(const Rational &q) { return q.convert_to<double>(); }

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Mathematical modulo, result in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

} // namespace weylclifford
