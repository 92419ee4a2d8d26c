#pragma once

#include <stdexcept>

#include "gpoly/rational.hpp"

namespace gpoly {

// Exact arithmetic in Q(s) with s*s = c for a fixed rational c: values are
// a + b*s. Used to evaluate at points whose square is rational without ever
// touching floating point. All operands of a binary operation must carry
// the same c (mixing is a programming error).
struct QuadExt {
  Rational a{0};  // rational part
  Rational b{0};  // coefficient of s
  Rational c{0};  // s*s

  QuadExt() = default;
  QuadExt(Rational a_, Rational b_, Rational c_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static QuadExt root(const Rational& c) { return QuadExt(Rational(0), Rational(1), c); }
  static QuadExt scalar(const Rational& v, const Rational& c) {
    return QuadExt(v, Rational(0), c);
  }

  bool is_rational() const { return b == 0; }

  QuadExt& operator+=(const QuadExt& o) {
    check(o);
    a += o.a;
    b += o.b;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    check(o);
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    return QuadExt(x.a * y.a + x.b * y.b * x.c, x.a * y.b + x.b * y.a, x.c);
  }
  // Division by conjugation; divisor must be a unit (norm != 0).
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    x.check(y);
    const Rational norm = y.a * y.a - y.b * y.b * y.c;
    if (norm == 0) throw std::invalid_argument("division by a non-unit quadratic value");
    return QuadExt((x.a * y.a - x.b * y.b * x.c) / norm, (x.b * y.a - x.a * y.b) / norm, x.c);
  }
  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b && c == o.c; }

  QuadExt pow(long e) const {
    if (e < 0) return QuadExt::scalar(Rational(1), c) / pow(-e);
    QuadExt acc = QuadExt::scalar(Rational(1), c);
    QuadExt base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      base = base * base;
    }
    return acc;
  }

 private:
  void check(const QuadExt& o) const {
    if (c != o.c) throw std::invalid_argument("mixed quadratic extensions");
  }
};

}  // namespace gpoly
