#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tightturan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" with q > 0, always including the denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or "p". Throws Error(InvalidArgument) on malformed text or q == 0.
Rational parse_rational(const std::string& text);

BigInt binomial(unsigned n, unsigned k);

inline BigInt floor_of(const Rational& q) {
  BigInt num = numerator_of(q), den = denominator_of(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

inline BigInt ceil_of(const Rational& q) {
  BigInt num = numerator_of(q), den = denominator_of(q);
  BigInt quot = num / den;
  if (num % den != 0 && num > 0) quot += 1;
  return quot;
}

}  // namespace tightturan
