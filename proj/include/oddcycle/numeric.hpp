#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddcycle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "num/den" form, denominator always present ("1/1", "0/1").
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline BigInt pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline Rational pow(const Rational& base, unsigned exp) {
  Rational out = 1;
  Rational b = base;
  while (exp != 0) {
    if (exp & 1U) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

}  // namespace oddcycle
