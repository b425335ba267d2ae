#pragma once

// Exact arithmetic base types: arbitrary-precision integers and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace exolie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline long to_long(const Integer& z) { return static_cast<long>(z); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// Smallest k >= 1 with k*q integral.
inline long rational_denominator(const Rational& q) { return to_long(den(q)); }

// q reduced into [0,1).
inline Rational frac_mod1(const Rational& q) {
  Integer n = num(q), d = den(q);
  Integer r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

inline std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << "/" << den(q);
  return os.str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (...) {
    throw std::runtime_error("bad rational literal: " + s);
  }
}

}  // namespace exolie
