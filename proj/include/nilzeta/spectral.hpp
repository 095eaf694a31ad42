#pragma once

#include "nilzeta/band.hpp"
#include "nilzeta/repdecomp.hpp"
#include "nilzeta/uea.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nilzeta {

struct Constants {
  static constexpr int kappa = 6;
  static constexpr int homogeneous_dimension = 10;
  static constexpr std::array<int, 5> kq{1, 3, 2, 3, 1};
  static constexpr std::array<int, 6> Nq{0, 1, 4, 6, 9, 10};
  static constexpr std::array<int, 5> aq{6, 2, 3, 2, 6};
};

struct SpectralConfig {
  int N = 256;
  double trust_fraction = 0.6;
  int margin = 32;
  double sym_tol = 1e-8;
  double match_tol = 1e-6;
  double conv_tol = 1e-8;  // agreement required between truncations N and 3N/4
};

class SymmetrizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class Untrusted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Images of X1..X5 in the Hermite basis. Nb = N + margin rows are kept so that
// products of the evaluated Rumin matrices are exact on the leading N x N block.
struct RepRealization {
  RepLabel label;
  int N = 1;
  int Nb = 1;
  double omega = 0;  // oscillator frequency of the basis; 0 for Scalar
  std::array<BandMatrix, 5> X;
};

RepRealization realize(const RepLabel& label, int N, int margin = 32);

BandMatrix evaluate(const UEAPoly& p, const RepRealization& R);
BlockBand evaluate(const UEAMatrix& m, const RepRealization& R);

// (D_{q-1} D_{q-1}^*)^{power} + (D_q^* D_q)^{power'}, leading N x N blocks, as a dense matrix.
// powers = a_q for the literal operator, 1 for the first-order sum used by the solver.
Eigen::MatrixXcd delta_q(const RepRealization& R, int q, bool literal = true);
BlockBand first_order_laplacian(const RepRealization& R, int q);  // a_q = 1, leading blocks

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  int trusted_count = 0;
};

Spectrum spectrum(const Eigen::MatrixXcd& M, double trust_fraction = 0.6, double sym_tol = 1e-8);
// Banded Hermitian solve of a square block operator, components interleaved.
Spectrum spectrum_banded(const BlockBand& M, double trust_fraction = 0.6, double sym_tol = 1e-8);
// Spectrum of the compressed D_{q-1}D_{q-1}^* + D_q^*D_q as squared singular values of
// A = [D_{q-1}^*; D_q] on the first N modes of H^q (sparse QR, then banded bidiagonalization).
Spectrum spectrum_first_order(const RepRealization& R, int q, double trust_fraction = 0.6);

double casimir_check(const RepRealization& R);
// ||D_{q+1} D_q|| / (||D_{q+1}|| ||D_q||) on the leading block.
double chain_residual(const RepRealization& R, int q);
// max |evaluate(formal_adjoint(D_q)) - evaluate(D_q)^*| on the leading block, relative.
double adjoint_residual(const RepRealization& R, int q);

struct TailFit {
  double amplitude = 0;     // N(mu) ~ amplitude * mu^exponent
  double exponent = 0;
  double window_top = 0;    // upper end of the trusted window
  int count = 0;
};

// Nonzero spectra of D_q^* D_q on the trusted window, q = 0..4.
struct RuminSpectra {
  RepLabel label;
  bool exact_scalar = false;
  SpectralConfig config;
  std::array<std::vector<double>, 5> C;
  std::array<TailFit, 5> fit;
  int unmatched = 0;          // eigenvalues that failed the multiset subtraction
  double middle_mismatch = 0; // max relative deviation of the q = 3 cross-check
};

RuminSpectra compute_spectra(const RepLabel& label, const SpectralConfig& cfg = {});

struct SuperZeta {
  cplx value{0};
  cplx derivative{0};
  double abs_error = 0;  // tail bound from the fitted growth law
  bool exact = false;
};

// sum_q (-1)^q N_q tr Delta_q^{-s} from the trusted spectra.
SuperZeta zeta_from_spectra(const RuminSpectra& sp, cplx s);
// Throws Untrusted if the error estimate exceeds tol.
SuperZeta super_zeta(const RepLabel& label, cplx s, const SpectralConfig& cfg = {}, double tol = HUGE_VAL);
double heat_supertrace(const RuminSpectra& sp, double t);
double heat_supertrace(const RepLabel& label, double t, const SpectralConfig& cfg = {});
// res_{s=1/kappa} from the fitted tails, exponents fixed to 1/k_q.
double residue_estimate(const RuminSpectra& sp);

// ---- exact scalar path ----
using QMatrix = std::vector<std::vector<QSqrt2>>;

// rho_{alpha,beta}(D_q) = (2 pi i)^{k_q} R_q.
QMatrix scalar_rumin_reduced(int q, const Rational& alpha, const Rational& beta);
// Delta_q / (2 pi)^{2 kappa} for Scalar(alpha, beta).
QMatrix normalized_delta(int q, const Rational& alpha, const Rational& beta);
std::vector<QSqrt2> char_poly(const QMatrix& m);          // ascending coefficients, monic
std::vector<QSqrt2> poly_from_roots(const std::vector<QSqrt2>& roots);
std::vector<QSqrt2> expected_normalized_spectrum(int q);  // for Scalar(1,0)
bool verify_scalar_spectrum(int q, const Rational& alpha, const Rational& beta);

// (2 pi)^{-2 kappa s} (alpha^2+beta^2)^{-kappa s} 4 (1 - 2^{kappa s/2})
SuperZeta scalar_zeta_closed(double alpha, double beta, cplx s);
// The same sum built term by term from the exact eigenvalue lists.
SuperZeta scalar_zeta_from_spectra(const Rational& alpha, const Rational& beta, cplx s);

// coeff * pi^pi_power with coeff in Q(sqrt2).
struct PiScaled {
  QSqrt2 coeff;
  int pi_power = 0;
  bool operator==(const PiScaled& o) const {
    return (coeff.is_zero() && o.coeff.is_zero()) || (coeff == o.coeff && pi_power == o.pi_power);
  }
};
PiScaled operator*(const PiScaled& a, const PiScaled& b);
// Exact value of the scalar zeta for Scalar(1,0) at s with kappa*s integral.
PiScaled exact_scalar_zeta_unit(const Rational& s);

}  // namespace nilzeta
