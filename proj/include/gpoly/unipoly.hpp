#pragma once

#include <string>
#include <vector>

#include "gpoly/rational.hpp"

namespace gpoly {

// Dense univariate polynomial over Q, coeffs[k] = coefficient of x^k.
// Trailing zeros are permitted; equality ignores them.
struct UniPoly {
  std::vector<Rational> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : coeffs(std::move(c)) {}

  // Highest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
      if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }

  Rational coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs.size()) return Rational(0);
    return coeffs[static_cast<std::size_t>(k)];
  }

  void add_to(int k, const Rational& v) {
    if (static_cast<std::size_t>(k) >= coeffs.size())
      coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(k)] += v;
  }

  Rational eval(const Rational& x) const {  // Horner
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const UniPoly& o) const {
    const std::size_t top = std::max(coeffs.size(), o.coeffs.size());
    for (std::size_t k = 0; k < top; ++k)
      if (coeff(static_cast<int>(k)) != o.coeff(static_cast<int>(k))) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
};

// "3 + 2*x - x^4" style, constant term first; "0" for the zero polynomial.
std::string poly_str(const UniPoly& p, const std::string& var = "x");

inline UniPoly unipoly(std::initializer_list<long> ints) {
  std::vector<Rational> c;
  c.reserve(ints.size());
  for (long v : ints) c.emplace_back(v);
  return UniPoly(std::move(c));
}

}  // namespace gpoly
