#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace bchkit {

// Exact arbitrary-precision arithmetic. All coefficients in this library are
// rationals kept in lowest terms with a positive denominator; nothing is ever
// rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
  return f;
}

inline std::string numerator_string(const Rational& q) { return numerator(q).str(); }
inline std::string denominator_string(const Rational& q) { return denominator(q).str(); }

// "7", "-1/2"
inline std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator_string(q);
  return numerator_string(q) + "/" + denominator_string(q);
}

}  // namespace bchkit
