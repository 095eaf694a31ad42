#pragma once

#include <complex>

// Forward-mode value/derivative pair over complex numbers.
namespace nilzeta::detail {

template <class T>
struct Dual {
  using C = std::complex<T>;
  C v{0}, d{0};
  Dual() = default;
  Dual(C v_, C d_ = C(0)) : v(v_), d(d_) {}
  Dual(T x) : v(x), d(0) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
};

template <class T>
Dual<T> exp(const Dual<T>& a) {
  const auto e = std::exp(a.v);
  return {e, e * a.d};
}
template <class T>
Dual<T> log(const Dual<T>& a) {
  return {std::log(a.v), a.d / a.v};
}
// x^{-s} for real x > 0
template <class T>
Dual<T> pow_neg(T x, const Dual<T>& s) {
  const T l = std::log(x);
  const auto p = std::exp(-s.v * l);
  return {p, -l * p * s.d};
}

}  // namespace nilzeta::detail
