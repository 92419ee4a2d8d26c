#include "gpoly/unipoly.hpp"

#include <sstream>

namespace gpoly {

std::string poly_str(const UniPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    const Rational& c = p.coeffs[k];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = (mag == 1) && k > 0;
    if (!unit) os << rat_str(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gpoly
