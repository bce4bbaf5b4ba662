#pragma once

#include "herbst/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace herbst {

using BigInteger = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInteger numerator(const Rational &q) { return boost::multiprecision::numerator(q); }
inline BigInteger denominator(const Rational &q) { return boost::multiprecision::denominator(q); }

// cpp_rational rejects a negative denominator, so normalize the sign first.
inline Rational make_rational(BigInteger p, BigInteger q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

inline BigInteger abs(const BigInteger &a) { return a < 0 ? BigInteger(-a) : a; }

inline BigInteger gcd(const BigInteger &a, const BigInteger &b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInteger lcm(const BigInteger &a, const BigInteger &b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Representative of a modulo m in [0, |m|).
inline BigInteger floor_mod(const BigInteger &a, const BigInteger &m) {
  BigInteger r = a % m; // truncated, sign follows a
  if (r < 0) r += abs(m);
  return r;
}

inline int sign(const BigInteger &a) { return a.sign(); }
inline int sign(const Rational &q) { return q.sign(); }

inline std::string to_string(const BigInteger &a) { return a.str(); }

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational &q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline BigInteger parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInteger(std::string(s));
}

inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  BigInteger p = parse_integer(s.substr(0, slash));
  BigInteger q = parse_integer(s.substr(slash + 1));
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(s) + "'");
  return make_rational(p, q);
}

} // namespace herbst
