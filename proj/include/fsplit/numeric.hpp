#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsplit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Always "num/den"; integers print as "num" only.
inline std::string to_string(const Rational& v) {
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text);

// p^e as a machine word; throws ExponentOverflow past the 15-bit exponent width.
std::uint64_t checked_prime_power(std::uint64_t p, unsigned e);

bool is_prime(std::uint64_t n);

}  // namespace fsplit
