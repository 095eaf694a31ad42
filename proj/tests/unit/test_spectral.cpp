#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/spectral.hpp"

using namespace nilzeta;

namespace {

SpectralConfig small_config() {
  SpectralConfig c;
  c.N = 128;
  return c;
}

}  // namespace

TEST_CASE("constants") {
  for (std::size_t q = 0; q < 5; ++q) {
    CHECK(Constants::aq[q] * Constants::kq[q] == Constants::kappa);
    CHECK(Constants::Nq[q + 1] - Constants::Nq[q] == Constants::kq[q]);
  }
}

TEST_CASE("exact scalar spectra") {
  for (int q = 0; q <= 5; ++q) {
    CHECK(verify_scalar_spectrum(q, 1, 0));
    CHECK(verify_scalar_spectrum(q, rat(-2, 3), rat(5, 4)));
  }
  CHECK(expected_normalized_spectrum(0) == std::vector<QSqrt2>{QSqrt2(1)});
  const auto p = poly_from_roots({QSqrt2(2), QSqrt2(3)});
  CHECK(p == std::vector<QSqrt2>{QSqrt2(6), QSqrt2(-5), QSqrt2(1)});
}

TEST_CASE("scalar zeta closed form and its exact value") {
  for (double s : {-1.3, 0.4, 2.0}) {
    const auto a = scalar_zeta_from_spectra(1, 0, s), b = scalar_zeta_closed(1, 0, s);
    CHECK(a.value.real() == doctest::Approx(b.value.real()).epsilon(1e-12));
  }
  CHECK(scalar_zeta_closed(3, 4, 1.0).value.real() ==
        doctest::Approx(std::pow(25.0, -6.0) * scalar_zeta_closed(1, 0, 1.0).value.real()).epsilon(1e-12));
  CHECK(scalar_zeta_from_spectra(1, 0, 0.0).derivative.real() == doctest::Approx(-12 * std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS(scalar_zeta_closed(0, 0, 1.0));
  const PiScaled z = exact_scalar_zeta_unit(rat(1, 6));
  CHECK(z.pi_power == -2);
  CHECK(z.coeff == QSqrt2(Rational(1), Rational(-1)));
}

TEST_CASE("oscillator oracle for the Schrodinger representation") {
  const auto R = realize(SchrodingerLabel{1}, 128);
  const auto S = spectrum_banded(first_order_laplacian(R, 0));
  for (int n = 0; n < 10; ++n) CHECK(S.eigenvalues[static_cast<std::size_t>(n)] == doctest::Approx(2 * M_PI * (2 * n + 1)).epsilon(1e-10));
  const auto F = spectrum_first_order(R, 0);
  for (int n = 0; n < 10; ++n) CHECK(F.eigenvalues[static_cast<std::size_t>(n)] == doctest::Approx(2 * M_PI * (2 * n + 1)).epsilon(1e-10));
  for (int q = 0; q < 4; ++q) CHECK(chain_residual(R, q) < 1e-12);
  for (int q = 0; q < 5; ++q) CHECK(adjoint_residual(R, q) < 1e-12);
}

TEST_CASE("first-order solver matches a dense eigensolve") {
  const auto R = realize(GenericLabel{1, 1, 0.5}, 48);
  for (int q = 0; q <= 5; ++q) {
    const auto dense = spectrum(delta_q(R, q, false));
    const auto svd = spectrum_first_order(R, q);
    REQUIRE(dense.eigenvalues.size() == svd.eigenvalues.size());
    for (std::size_t i = 0; i < 20; ++i)
      CHECK(svd.eigenvalues[i] == doctest::Approx(dense.eigenvalues[i]).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("Casimir and homogeneity") {
  CHECK(casimir_check(realize(GenericLabel{1, 0, 5}, 128)) < 1e-10);
  const auto cfg = small_config();
  const auto z1 = zeta_from_spectra(compute_spectra(SchrodingerLabel{1}, cfg), 2.0);
  const auto z2 = zeta_from_spectra(compute_spectra(SchrodingerLabel{-2}, cfg), 2.0);
  CHECK(std::abs(z2.value - std::pow(2.0, -12.0) * z1.value) <= z2.abs_error + std::pow(2.0, -12.0) * z1.abs_error + 1e-15);
}

TEST_CASE("rotation invariance of generic spectra") {
  const auto cfg = small_config();
  const auto a = compute_spectra(GenericLabel{0.6, 0.8, 1.5}, cfg);
  const auto b = compute_spectra(GenericLabel{1.0, 0.0, 1.5}, cfg);
  for (std::size_t q = 0; q < 5; ++q) {
    const std::size_t n = std::min(a.C[q].size(), b.C[q].size());
    for (std::size_t i = 0; i < n; ++i) CHECK(a.C[q][i] == doctest::Approx(b.C[q][i]).epsilon(1e-8));
  }
  CHECK(a.unmatched == 0);
}

TEST_CASE("shifted truncation does not change the trusted window") {
  SpectralConfig big;
  big.N = 192;
  const auto a = compute_spectra(SchrodingerLabel{1}, small_config());
  const auto b = compute_spectra(SchrodingerLabel{1}, big);
  for (std::size_t q = 0; q < 5; ++q)
    for (std::size_t i = 0; i < std::min(a.C[q].size(), b.C[q].size()); ++i) CHECK(a.C[q][i] == doctest::Approx(b.C[q][i]).epsilon(1e-8));
}

TEST_CASE("heat supertrace of a scalar representation") {
  const auto sp = compute_spectra(ScalarLabel{1, 0});
  CHECK(sp.exact_scalar);
  const double t = 1e-6;
  double want = 0;
  for (int q = 0; q < 5; ++q) {
    const double w = (q % 2 == 0 ? -1.0 : 1.0) * Constants::kq[static_cast<std::size_t>(q)];
    for (double mu : sp.C[static_cast<std::size_t>(q)]) want += w * std::exp(-t * std::pow(mu, Constants::aq[static_cast<std::size_t>(q)]));
  }
  CHECK(heat_supertrace(sp, t) == doctest::Approx(want));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS(realize(GenericLabel{0, 0, 1}, 64));
  CHECK_THROWS(realize(SchrodingerLabel{0}, 64));
  CHECK_THROWS(spectrum_first_order(realize(SchrodingerLabel{1}, 32), 7));
  CHECK_THROWS_AS(super_zeta(SchrodingerLabel{1}, 2.0, small_config(), 0.0), Untrusted);
}
