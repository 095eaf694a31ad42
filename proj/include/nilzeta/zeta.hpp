#pragma once

#include "nilzeta/rational.hpp"

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>

namespace nilzeta {

using cplx = std::complex<double>;

struct ZetaValue {
  cplx value{0, 0};
  std::optional<cplx> derivative;
  double abs_error = 0;
};

class AtPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation precision: digits <= 16 runs in double, otherwise in long double.
struct ZetaOptions {
  int digits = 16;
  bool want_derivative = true;
};
// Distance to a pole below which evaluations report AtPole.
inline constexpr double kPoleGuard = 1e-6;

struct ShiftedLattice2 {
  std::array<std::array<Rational, 2>, 2> gram{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  std::array<Rational, 2> shift{Rational(0), Rational(0)};

  void validate() const;  // symmetric positive definite
  static ShiftedLattice2 standard(const Rational& a = 0, const Rational& b = 0);
};

double bernoulli2(double a);
Rational bernoulli2(const Rational& a);

// 1/Gamma(z) and its derivative.
std::pair<cplx, cplx> rgamma_with_derivative(cplx z);
cplx digamma(cplx z);

ZetaValue hurwitz(cplx s, double a, const ZetaOptions& opt = {});
ZetaValue riemann(cplx s, const ZetaOptions& opt = {});
ZetaValue epstein_1d(cplx s, double a, const ZetaOptions& opt = {});
ZetaValue epstein_1d(cplx s, const Rational& a, const ZetaOptions& opt = {});
// sum' Q(x+shift)^{-s/2}, x in Z^2, Q(v) = v^T gram v.
ZetaValue epstein_2d(cplx s, const ShiftedLattice2& L, const ZetaOptions& opt = {});

// Residue at s0 via the trapezoid rule on a circle of the given radius.
cplx numerical_residue(const std::function<cplx(cplx)>& f, cplx s0, double radius, int points = 64);

}  // namespace nilzeta
