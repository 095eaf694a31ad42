#include "special.hpp"

#include "nilzeta/zeta.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <limits>

namespace nilzeta {

namespace detail {

template <class T>
Dual<T> rgamma(const Dual<T>& z) {
  using C = std::complex<T>;
  const T W = std::numeric_limits<T>::digits > 53 ? T(25) : T(20);
  Dual<T> prod(C(1));
  Dual<T> w = z;
  while (std::real(w.v) < W || std::abs(w.v) < W) {
    prod *= w;
    w += Dual<T>(T(1));
  }
  // Stirling series for log Gamma(w)
  const T half_log_2pi = T(0.5) * std::log(T(2) * boost::math::constants::pi<T>());
  Dual<T> lg = (w - Dual<T>(T(0.5))) * log(w) - w + Dual<T>(half_log_2pi);
  const Dual<T> w2 = w * w;
  Dual<T> wp = w;
  const int K = std::numeric_limits<T>::digits > 53 ? 16 : 12;
  for (int k = 1; k <= K; ++k) {
    const T b = boost::math::bernoulli_b2n<T>(k);
    lg += Dual<T>(C(b / (T(2 * k) * T(2 * k - 1)))) / wp;
    wp *= w2;
  }
  return prod * exp(-lg);
}

template Dual<double> rgamma(const Dual<double>&);
template Dual<long double> rgamma(const Dual<long double>&);

}  // namespace detail

std::pair<cplx, cplx> rgamma_with_derivative(cplx z) {
  const auto r = detail::rgamma(detail::Dual<double>(z, cplx(1)));
  return {r.v, r.d};
}

cplx digamma(cplx z) {
  const auto [g, dg] = rgamma_with_derivative(z);
  if (g == cplx(0)) throw AtPole("digamma at a pole");
  return -dg / g;
}

}  // namespace nilzeta
