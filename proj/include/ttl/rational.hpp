#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ttl/error.hpp"

namespace ttl {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Every coordinate in the toolkit is a Rat; floating point is
// never used.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline int sign(const Rat& q) { return q.sign(); }

// Parses optionally signed "p" or "p/q" and normalizes to lowest terms with a
// positive denominator. Rejects whitespace, empty strings and any other
// syntax.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  auto parse_int = [&](const char* what) -> Int {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    Int v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    if (pos == start)
      throw ParseError(std::string(what) + " missing in rational: '" + s + "'");
    return neg ? Int(-v) : v;
  };
  Int num = parse_int("numerator");
  Int den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = parse_int("denominator");
  }
  if (pos != s.size()) throw ParseError("invalid character in rational: '" + s + "'");
  if (den == 0) throw ParseError("zero denominator: '" + s + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& q) { return q.str(); }

// Largest integer n with n <= q.
inline Int rat_floor(const Rat& q) {
  Int n = numerator(q) / denominator(q);
  if (numerator(q) < 0 && numerator(q) % denominator(q) != 0) --n;
  return n;
}

// Smallest integer n with n >= q.
inline Int rat_ceil(const Rat& q) {
  Int n = numerator(q) / denominator(q);
  if (numerator(q) > 0 && numerator(q) % denominator(q) != 0) ++n;
  return n;
}

}  // namespace ttl
