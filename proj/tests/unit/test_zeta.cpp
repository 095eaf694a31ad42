#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles/zeta_oracle.hpp"
#include "nilzeta/zeta.hpp"

using namespace nilzeta;

TEST_CASE("Hurwitz against direct summation") {
  for (double a : {0.25, 0.5, 1.0, 2.75})
    for (double s : {1.5, 2.0, 3.3}) {
      CAPTURE(a);
      CAPTURE(s);
      CHECK(hurwitz(s, a).value.real() == doctest::Approx(oracle::hurwitz_direct(s, a)).epsilon(1e-11));
    }
}

TEST_CASE("Hurwitz special values") {
  for (double a : {0.25, 0.5, 0.75}) CHECK(hurwitz(-1.0, a).value.real() == doctest::Approx(-bernoulli2(a) / 2).epsilon(1e-12));
  CHECK(hurwitz(0.0, 0.3).value.real() == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(bernoulli2(rat(1, 3)) == rat(-1, 18));
  CHECK_THROWS_AS(hurwitz(1.0, 0.5), AtPole);
}

TEST_CASE("Riemann zeta") {
  CHECK(riemann(2.0).value.real() == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-14));
  CHECK(riemann(-1.0).value.real() == doctest::Approx(-1.0 / 12).epsilon(1e-13));
  CHECK(riemann(0.0).derivative->real() == doctest::Approx(-0.5 * std::log(2 * M_PI)).epsilon(1e-13));
  const auto z = riemann(cplx(0.5, 14.134725141734693));
  CHECK(std::abs(z.value) < 1e-9);
}

TEST_CASE("derivative against a central difference") {
  const double h = 1e-5;
  for (double s : {-2.5, 0.3, 2.2}) {
    const double fd = (hurwitz(s + h, 0.4).value.real() - hurwitz(s - h, 0.4).value.real()) / (2 * h);
    CHECK(hurwitz(s, 0.4).derivative->real() == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("one-dimensional Epstein") {
  CHECK(epstein_1d(0.0, Rational(0)).value.real() == doctest::Approx(-1.0));
  CHECK(std::abs(epstein_1d(0.0, rat(1, 3)).value) < 1e-12);
  CHECK(epstein_1d(2.0, Rational(0)).value.real() == doctest::Approx(M_PI * M_PI / 3).epsilon(1e-13));
  CHECK(epstein_1d(3.0, rat(1, 4)).value.real() ==
        doctest::Approx(oracle::hurwitz_direct(3.0, 0.25) + oracle::hurwitz_direct(3.0, 0.75)).epsilon(1e-11));
}

TEST_CASE("two-dimensional Epstein against 4 zeta beta") {
  // sum' (m^2+n^2)^{-s/2}
  for (double s : {3.0, 4.0, 6.5})
    CHECK(epstein_2d(s, ShiftedLattice2::standard()).value.real() == doctest::Approx(oracle::square_lattice_epstein(s / 2)).epsilon(1e-10));
  CHECK(epstein_2d(0.0, ShiftedLattice2::standard()).value.real() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(epstein_2d(0.0, ShiftedLattice2::standard(rat(1, 2), rat(1, 3))).value) < 1e-10);
  CHECK_THROWS_AS(epstein_2d(2.0, ShiftedLattice2::standard()), AtPole);
}

TEST_CASE("Epstein with a general Gram matrix matches a brute-force box sum") {
  ShiftedLattice2 L;
  L.gram = {{{2, rat(1, 2)}, {rat(1, 2), 1}}};
  L.shift = {rat(1, 3), 0};
  const double s = 7.0;
  long double sum = 0;
  for (int m = -300; m <= 300; ++m)
    for (int n = -300; n <= 300; ++n) {
      const double x = m + 1.0 / 3, y = n;
      const double q = 2 * x * x + x * y + y * y;
      sum += std::pow(q, -s / 2);
    }
  CHECK(epstein_2d(s, L).value.real() == doctest::Approx(static_cast<double>(sum)).epsilon(1e-9));
  ShiftedLattice2 bad;
  bad.gram = {{{1, 2}, {2, 1}}};
  CHECK_THROWS(bad.validate());
}

TEST_CASE("residues") {
  const cplx r = numerical_residue([](cplx s) { return riemann(s, {16, false}).value; }, 1.0, 1e-2);
  CHECK(r.real() == doctest::Approx(1.0).epsilon(1e-10));
  const cplx r2 = numerical_residue([](cplx s) { return epstein_2d(s, ShiftedLattice2::standard(), {16, false}).value; }, 2.0, 1e-2);
  CHECK(r2.real() == doctest::Approx(2 * M_PI).epsilon(1e-9));
}

TEST_CASE("extended precision path") {
  ZetaOptions hi;
  hi.digits = 18;
  CHECK(hurwitz(2.5, 0.3, hi).value.real() == doctest::Approx(hurwitz(2.5, 0.3).value.real()).epsilon(1e-14));
  CHECK(epstein_2d(3.0, ShiftedLattice2::standard(rat(1, 2), 0), hi).value.real() ==
        doctest::Approx(epstein_2d(3.0, ShiftedLattice2::standard(rat(1, 2), 0)).value.real()).epsilon(1e-13));
}
