#pragma once

#include <gmpxx.h>

#include <string>

namespace gpoly {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Integer = mpz_class;
using Rational = mpq_class;

// Parse "num" or "num/den" (optional leading '-', arbitrary precision).
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rat_parse(const std::string& text);

// Canonical text form: "num/den" in lowest terms, plain "num" when den == 1.
std::string rat_str(const Rational& r);

// base^exp with integer exp (negative allowed for nonzero base). 0^0 == 1.
Rational rat_pow(const Rational& base, long exp);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gpoly
