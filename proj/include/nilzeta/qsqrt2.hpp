#pragma once

#include "nilzeta/rational.hpp"

#include <string>

namespace nilzeta {

// a + b*sqrt(2) with exact rational parts.
struct QSqrt2 {
  Rational a{0};
  Rational b{0};

  QSqrt2() = default;
  QSqrt2(Rational a_) : a(std::move(a_)) {}
  QSqrt2(long long a_) : a(a_) {}
  QSqrt2(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static QSqrt2 sqrt2() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QSqrt2&) const = default;
  QSqrt2 conjugate() const { return {a, -b}; }  // Galois conjugate
  Rational norm() const { return a * a - 2 * b * b; }
  double to_double() const;
  long double to_long_double() const;
  int sign() const;

  QSqrt2 operator-() const { return {-a, -b}; }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);
};

QSqrt2 operator+(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator-(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator*(QSqrt2 x, const QSqrt2& y);
QSqrt2 operator/(QSqrt2 x, const QSqrt2& y);
QSqrt2 pow(QSqrt2 x, unsigned n);
bool operator<(const QSqrt2& x, const QSqrt2& y);

std::string to_string(const QSqrt2& x);

}  // namespace nilzeta
