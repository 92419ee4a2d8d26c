#include "gpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gpoly {

namespace {

bool valid_int_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = (allow_sign && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rat_parse(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_int_token(num, true) || !valid_int_token(den, false))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) {
  return r.get_str();  // mpq keeps canonical form; prints "n" or "n/d"
}

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
    return Rational(0);
  }
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  if (exp < 0) out = 1 / out;
  return out;
}

}  // namespace gpoly
