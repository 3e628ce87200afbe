#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lborder {

// Always kept in lowest terms with a positive denominator; zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace lborder
