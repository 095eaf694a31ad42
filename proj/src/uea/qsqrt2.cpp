#include "nilzeta/qsqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace nilzeta {

double QSqrt2::to_double() const {
  return nilzeta::to_double(a) + nilzeta::to_double(b) * std::sqrt(2.0);
}

long double QSqrt2::to_long_double() const {
  return nilzeta::to_long_double(a) + nilzeta::to_long_double(b) * std::sqrt(2.0L);
}

int QSqrt2::sign() const {
  const int sa = a > 0 ? 1 : (a < 0 ? -1 : 0);
  const int sb = b > 0 ? 1 : (b < 0 ? -1 : 0);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with 2 b^2
  const Rational d = a * a - 2 * b * b;
  if (d == 0) return 0;
  return d > 0 ? sa : sb;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a += o.a;
  b += o.b;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational na = a * o.a + 2 * b * o.b;
  Rational nb = a * o.b + b * o.a;
  a = std::move(na);
  b = std::move(nb);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("QSqrt2 division by zero");
  *this *= o.conjugate();
  a /= n;
  b /= n;
  return *this;
}

QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }

QSqrt2 pow(QSqrt2 x, unsigned n) {
  QSqrt2 r(1);
  while (n) {
    if (n & 1U) r *= x;
    n >>= 1;
    if (n) x *= x;
  }
  return r;
}

bool operator<(const QSqrt2& x, const QSqrt2& y) { return (y - x).sign() > 0; }

std::string to_string(const QSqrt2& x) {
  if (x.b == 0) return to_string(x.a);
  std::string s;
  if (x.a != 0) s = to_string(x.a) + (x.b > 0 ? "+" : "");
  return s + to_string(x.b) + "*sqrt2";
}

}  // namespace nilzeta
