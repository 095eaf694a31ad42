#include "special.hpp"

#include "nilzeta/zeta.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>

namespace nilzeta {

void ShiftedLattice2::validate() const {
  if (gram[0][1] != gram[1][0]) throw std::invalid_argument("gram matrix not symmetric");
  if (!(gram[0][0] > 0) || !(gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0] > 0))
    throw std::invalid_argument("gram matrix not positive definite");
}

ShiftedLattice2 ShiftedLattice2::standard(const Rational& a, const Rational& b) {
  ShiftedLattice2 L;
  L.shift = {a, b};
  return L;
}

namespace {

using detail::Dual;

template <class T>
struct IncGamma {
  std::complex<T> value, log_moment;  // int_1^inf t^{z-1} e^{-yt} dt and the same with log t
  T err;
};

// int_1^inf t^{z-1} e^{-y t} dt = e^{-y}/y int_0^inf e^{-v} (1+v/y)^{z-1} dv
template <class T>
IncGamma<T> inc_gamma(std::complex<T> z, T y) {
  using C = std::complex<T>;
  static thread_local boost::math::quadrature::exp_sinh<T> quad;
  const T tol = std::numeric_limits<T>::digits > 53 ? T(1e-18) : T(1e-14);
  const C zm1 = z - C(1);
  auto f = [&](T v) -> C { return std::exp(C(-v) + zm1 * std::log1p(v / y)); };
  auto g = [&](T v) -> C {
    const T l = std::log1p(v / y);
    return std::exp(C(-v) + zm1 * l) * l;
  };
  T e1 = 0, e2 = 0;
  const C I = quad.integrate(f, tol, &e1);
  const C J = quad.integrate(g, tol, &e2);
  const T pre = std::exp(-y) / y;
  return {pre * I, pre * J, pre * (e1 + e2)};
}

template <class T>
T cutoff_y(T excess) {
  const T base = std::numeric_limits<T>::digits > 53 ? T(52) : T(45);
  const T m = std::max(excess, T(0));
  T y = base;
  for (int i = 0; i < 8; ++i) y = base + m * std::log(std::max(y, T(1)));
  return y;
}

struct Reduced {
  Rational A, B, C;
  std::array<Rational, 2> shift;
};

Reduced reduce_form(const ShiftedLattice2& L) {
  Rational A = L.gram[0][0], B = L.gram[0][1], C = L.gram[1][1];
  // U columns are the new basis in old coordinates
  BigInt u00 = 1, u01 = 0, u10 = 0, u11 = 1;
  for (int it = 0; it < 10000; ++it) {
    if (A > C) {
      std::swap(A, C);
      std::swap(u00, u01);
      std::swap(u10, u11);
    }
    const Rational q = B / A;
    const BigInt m = floor(q + Rational(1, 2));
    if (m == 0) break;
    C = C - 2 * Rational(m) * B + Rational(m) * Rational(m) * A;
    B = B - Rational(m) * A;
    u01 -= m * u00;
    u11 -= m * u10;
  }
  if (A > C) {
    std::swap(A, C);
    std::swap(u00, u01);
    std::swap(u10, u11);
  }
  // y = U^{-1} a, det U = +-1
  const BigInt det = u00 * u11 - u01 * u10;
  const Rational a0 = L.shift[0], a1 = L.shift[1];
  Rational y0 = (Rational(u11) * a0 - Rational(u01) * a1) / Rational(det);
  Rational y1 = (-Rational(u10) * a0 + Rational(u00) * a1) / Rational(det);
  return {A, B, C, {frac(y0), frac(y1)}};
}

template <class T>
ZetaValue epstein_2d_t(cplx s_in, const ShiftedLattice2& L, const ZetaOptions& opt) {
  using C = std::complex<T>;
  const T pi = boost::math::constants::pi<T>();
  const C sv(s_in);
  if (std::abs(sv - C(2)) < T(kPoleGuard)) throw AtPole("epstein_2d: pole at s = 2");
  L.validate();
  const Reduced R = reduce_form(L);
  const Rational detq = R.A * R.C - R.B * R.B;
  const T det = static_cast<T>(to_long_double(detq));
  const T sq = std::sqrt(det);
  const T g00 = static_cast<T>(to_long_double(R.A)) / sq, g01 = static_cast<T>(to_long_double(R.B)) / sq,
          g11 = static_cast<T>(to_long_double(R.C)) / sq;
  // inverse of a unimodular-determinant form
  const T h00 = g11, h01 = -g01, h11 = g00;
  const T a0 = static_cast<T>(to_long_double(R.shift[0])), a1 = static_cast<T>(to_long_double(R.shift[1]));
  const bool delta = R.shift[0] == 0 && R.shift[1] == 0;
  const T tr = g00 + g11;
  const T lmin = (tr - std::sqrt(std::max(tr * tr - 4, T(0)))) / 2;

  const Dual<T> s(sv, C(1));
  const Dual<T> half(T(0.5));
  const Dual<T> z1 = s * half;
  const Dual<T> z2 = Dual<T>(T(1)) - s * half;
  const T eps = detail::eps_of<T>();

  Dual<T> sum1, sum2;
  T err = 0, l1 = 0;
  {
    const T ymax = cutoff_y<T>(std::real(z1.v) - 1);
    const T rr = std::sqrt(ymax / (pi * lmin)) + 1;
    for (long long x0 = static_cast<long long>(std::floor(-a0 - rr)); x0 <= static_cast<long long>(std::ceil(-a0 + rr)); ++x0)
      for (long long x1 = static_cast<long long>(std::floor(-a1 - rr)); x1 <= static_cast<long long>(std::ceil(-a1 + rr)); ++x1) {
        const T p0 = T(x0) + a0, p1 = T(x1) + a1;
        if (delta && x0 == 0 && x1 == 0) continue;
        const T y = pi * (g00 * p0 * p0 + 2 * g01 * p0 * p1 + g11 * p1 * p1);
        if (y > ymax) continue;
        const auto ig = inc_gamma<T>(z1.v, y);
        sum1 += Dual<T>(ig.value, T(0.5) * ig.log_moment);
        err += ig.err;
        l1 += std::abs(ig.value);
      }
  }
  {
    const T ymax = cutoff_y<T>(std::real(z2.v) - 1);
    const T tr2 = h00 + h11;
    const T lmin2 = (tr2 - std::sqrt(std::max(tr2 * tr2 - 4, T(0)))) / 2;
    const long long rr = static_cast<long long>(std::ceil(std::sqrt(ymax / (pi * lmin2)))) + 1;
    for (long long l0 = -rr; l0 <= rr; ++l0)
      for (long long l1i = -rr; l1i <= rr; ++l1i) {
        if (l0 == 0 && l1i == 0) continue;
        const T y = pi * (h00 * T(l0) * T(l0) + 2 * h01 * T(l0) * T(l1i) + h11 * T(l1i) * T(l1i));
        if (y > ymax) continue;
        const Rational ph = frac(Rational(l0) * R.shift[0] + Rational(l1i) * R.shift[1]);
        const T c = std::cos(2 * pi * static_cast<T>(to_long_double(ph)));
        if (c == 0) continue;
        const auto ig = inc_gamma<T>(z2.v, y);
        sum2 += Dual<T>(c * ig.value, -T(0.5) * c * ig.log_moment);
        err += ig.err;
        l1 += std::abs(ig.value);
      }
  }
  const Dual<T> two(T(2));
  const Dual<T> lam = sum1 + sum2 + two / (s - two);
  const Dual<T> pis = detail::exp(z1 * Dual<T>(std::log(pi)));
  const Dual<T> pref = pis * detail::rgamma(z1);
  Dual<T> zn = pref * lam;
  if (delta) zn -= pis * detail::rgamma(z1 + Dual<T>(T(1)));
  const Dual<T> scale = detail::exp(-s * Dual<T>(T(0.25) * std::log(det)));
  const Dual<T> z = scale * zn;

  ZetaValue out;
  out.value = cplx(z.v);
  if (opt.want_derivative) out.derivative = cplx(z.d);
  out.abs_error = static_cast<double>(std::abs(scale.v * pref.v) * (err + 8 * eps * l1) + 8 * eps * std::abs(z.v));
  return out;
}

template <class T>
ZetaValue epstein_1d_t(cplx s_in, const Rational& a, const ZetaOptions& opt) {
  using C = std::complex<T>;
  const Rational f = frac(a);
  const Dual<T> s(C(s_in), C(1));
  if (std::abs(s.v - C(1)) < T(kPoleGuard)) throw AtPole("epstein_1d: pole at s = 1");
  Dual<T> v;
  T err;
  if (f == 0) {
    const auto h = detail::hurwitz<T>(s, T(1));
    v = Dual<T>(T(2)) * h.value;
    err = 2 * h.abs_error;
  } else {
    const T af = static_cast<T>(to_long_double(f));
    const T bf = static_cast<T>(to_long_double(Rational(1) - f));
    const auto h1 = detail::hurwitz<T>(s, af);
    const auto h2 = detail::hurwitz<T>(s, bf);
    v = h1.value + h2.value;
    err = h1.abs_error + h2.abs_error;
  }
  ZetaValue out;
  out.value = cplx(v.v);
  if (opt.want_derivative) out.derivative = cplx(v.d);
  out.abs_error = static_cast<double>(err);
  return out;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite shift");
  int e = 0;
  const double m = std::frexp(x, &e);
  Rational r(static_cast<long long>(std::ldexp(m, 53)));
  e -= 53;
  BigInt p = 1;
  for (int i = 0; i < std::abs(e); ++i) p *= 2;
  return e >= 0 ? r * Rational(p) : r / Rational(p);
}

}  // namespace

ZetaValue epstein_2d(cplx s, const ShiftedLattice2& L, const ZetaOptions& opt) {
  return opt.digits > 16 ? epstein_2d_t<long double>(s, L, opt) : epstein_2d_t<double>(s, L, opt);
}

ZetaValue epstein_1d(cplx s, const Rational& a, const ZetaOptions& opt) {
  return opt.digits > 16 ? epstein_1d_t<long double>(s, a, opt) : epstein_1d_t<double>(s, a, opt);
}

ZetaValue epstein_1d(cplx s, double a, const ZetaOptions& opt) { return epstein_1d(s, rational_from_double(a), opt); }

}  // namespace nilzeta
