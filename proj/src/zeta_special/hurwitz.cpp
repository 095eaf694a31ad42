#include "special.hpp"

#include "nilzeta/zeta.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace nilzeta {

namespace detail {

template <class T>
HurwitzOut<T> hurwitz(const Dual<T>& s, T a) {
  using C = std::complex<T>;
  if (!(a > 0)) throw std::invalid_argument("hurwitz: a must be positive");
  if (std::abs(s.v - C(1)) < T(kPoleGuard)) throw AtPole("hurwitz: pole at s = 1");
  const T eps = eps_of<T>();
  const int N = 12 + static_cast<int>(std::ceil(std::abs(s.v)));
  Dual<T> sum;
  T scale = 0;  // largest partial magnitude, for the rounding bound
  auto track = [&] { scale = std::max(scale, std::abs(sum.v) + std::abs(sum.d)); };
  for (int k = 0; k < N; ++k) {
    sum += pow_neg(T(k) + a, s);
    track();
  }
  const T x = T(N) + a;
  const Dual<T> one(T(1));
  // x^{1-s}/(s-1) + x^{-s}/2
  const Dual<T> xs = pow_neg(x, s);
  sum += Dual<T>(C(x)) * xs / (s - one);
  sum += Dual<T>(T(0.5)) * xs;
  track();
  // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
  Dual<T> rising = s;  // (s)_{2j-1}
  Dual<T> xpow = xs / Dual<T>(C(x));
  T last = 0;
  const int max_j = std::numeric_limits<T>::digits > 53 ? 40 : 30;
  for (int j = 1; j <= max_j; ++j) {
    const T coef = boost::math::bernoulli_b2n<T>(j) / boost::math::factorial<T>(2 * j);
    const Dual<T> term = Dual<T>(C(coef)) * rising * xpow;
    sum += term;
    last = std::abs(term.v) + std::abs(term.d);
    if (last <= eps * (std::abs(sum.v) + std::abs(sum.d)) || (term.v == C(0) && term.d == C(0))) break;
    rising *= (s + Dual<T>(T(2 * j - 1))) * (s + Dual<T>(T(2 * j)));
    xpow /= Dual<T>(C(x * x));
  }
  track();
  const T err = last + T(4 * N) * eps * scale;
  return {sum, err};
}

template HurwitzOut<double> hurwitz(const Dual<double>&, double);
template HurwitzOut<long double> hurwitz(const Dual<long double>&, long double);

}  // namespace detail

double bernoulli2(double a) { return a * a - a + 1.0 / 6.0; }
Rational bernoulli2(const Rational& a) { return a * a - a + Rational(1, 6); }

namespace {

template <class T>
ZetaValue hurwitz_t(cplx s, double a, const ZetaOptions& opt) {
  using C = std::complex<T>;
  const auto out = detail::hurwitz<T>(detail::Dual<T>(C(s), C(1)), T(a));
  ZetaValue z;
  z.value = cplx(out.value.v);
  if (opt.want_derivative) z.derivative = cplx(out.value.d);
  z.abs_error = static_cast<double>(out.abs_error);
  return z;
}

}  // namespace

ZetaValue hurwitz(cplx s, double a, const ZetaOptions& opt) {
  return opt.digits > 16 ? hurwitz_t<long double>(s, a, opt) : hurwitz_t<double>(s, a, opt);
}

ZetaValue riemann(cplx s, const ZetaOptions& opt) { return hurwitz(s, 1.0, opt); }

cplx numerical_residue(const std::function<cplx(cplx)>& f, cplx s0, double radius, int points) {
  cplx acc = 0;
  for (int k = 0; k < points; ++k) {
    const cplx e = std::polar(1.0, 2 * M_PI * (k + 0.5) / points);
    acc += f(s0 + radius * e) * radius * e;
  }
  return acc / static_cast<double>(points);
}

}  // namespace nilzeta
