#pragma once

#include <boost/rational.hpp>

#include <string>

namespace frobstrat {

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline long long floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }
inline long long ceil(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

}  // namespace frobstrat
