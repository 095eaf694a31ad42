#include "nilzeta/spectral.hpp"

#include <cmath>
#include <limits>

namespace nilzeta {

namespace {

QMatrix zeros(std::size_t r, std::size_t c) { return QMatrix(r, std::vector<QSqrt2>(c)); }

QMatrix transpose(const QMatrix& a) {
  if (a.empty()) return {};
  QMatrix t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
  QMatrix c = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

QMatrix add(QMatrix a, const QMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

QMatrix mpow(const QMatrix& a, int p) {
  QMatrix acc = a;
  for (int k = 1; k < p; ++k) acc = mul(acc, a);
  return acc;
}

Rational rpow(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

QMatrix scalar_rumin_reduced(int q, const Rational& alpha, const Rational& beta) {
  const UEAMatrix D = rumin_matrix(q);
  const int k = Constants::kq[static_cast<std::size_t>(q)];
  QMatrix R = zeros(static_cast<std::size_t>(D.rows), static_cast<std::size_t>(D.cols));
  for (int i = 0; i < D.rows; ++i)
    for (int j = 0; j < D.cols; ++j)
      for (const auto& [m, c] : D.at(i, j).terms) {
        if (m[2] || m[3] || m[4]) continue;
        if (m[0] + m[1] != k) throw std::logic_error("scalar_rumin_reduced: entry not homogeneous of order k_q");
        R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            c * QSqrt2(rpow(alpha, m[0]) * rpow(beta, m[1]));
      }
  return R;
}

QMatrix normalized_delta(int q, const Rational& alpha, const Rational& beta) {
  if (q < 0 || q > 5) throw std::invalid_argument("normalized_delta: q out of range");
  const std::size_t dim = static_cast<std::size_t>(kCohomologyDims[static_cast<std::size_t>(q)]);
  QMatrix out = zeros(dim, dim);
  if (q > 0) {
    const QMatrix R = scalar_rumin_reduced(q - 1, alpha, beta);
    out = add(out, mpow(mul(R, transpose(R)), Constants::aq[static_cast<std::size_t>(q - 1)]));
  }
  if (q < 5) {
    const QMatrix R = scalar_rumin_reduced(q, alpha, beta);
    out = add(out, mpow(mul(transpose(R), R), Constants::aq[static_cast<std::size_t>(q)]));
  }
  return out;
}

std::vector<QSqrt2> char_poly(const QMatrix& A) {
  const std::size_t n = A.size();
  std::vector<QSqrt2> c(n + 1);
  c[n] = QSqrt2(1);
  QMatrix M = zeros(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix AM = mul(A, M);
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    const QMatrix AMk = mul(A, M);
    QSqrt2 tr;
    for (std::size_t i = 0; i < n; ++i) tr += AMk[i][i];
    c[n - k] = -(tr / QSqrt2(static_cast<long long>(k)));
  }
  return c;
}

std::vector<QSqrt2> poly_from_roots(const std::vector<QSqrt2>& roots) {
  std::vector<QSqrt2> p{QSqrt2(1)};
  for (const auto& r : roots) {
    std::vector<QSqrt2> np(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      np[i + 1] += p[i];
      np[i] -= r * p[i];
    }
    p = np;
  }
  return p;
}

std::vector<QSqrt2> expected_normalized_spectrum(int q) {
  const QSqrt2 one(1), eighth(Rational(1, 8));
  switch (q) {
    case 0:
    case 5: return {one};
    case 1:
    case 4: return {one, one};
    case 2:
    case 3: return {one, eighth, eighth};
    default: throw std::invalid_argument("expected_normalized_spectrum: q out of range");
  }
}

bool verify_scalar_spectrum(int q, const Rational& alpha, const Rational& beta) {
  const Rational r2 = rpow(alpha * alpha + beta * beta, Constants::kappa);
  std::vector<QSqrt2> roots;
  for (const auto& s : expected_normalized_spectrum(q)) roots.push_back(s * QSqrt2(r2));
  return char_poly(normalized_delta(q, alpha, beta)) == poly_from_roots(roots);
}

SuperZeta scalar_zeta_closed(double alpha, double beta, cplx s) {
  const double r2 = alpha * alpha + beta * beta;
  if (!(r2 > 0)) throw std::invalid_argument("scalar_zeta_closed: (alpha,beta) = (0,0)");
  const double k = Constants::kappa;
  const double L = std::log(4 * M_PI * M_PI * r2);
  const cplx e = std::exp(-k * s * L);
  const cplx t = std::exp(k * s * std::log(2.0) / 2.0);
  SuperZeta z;
  z.exact = true;
  z.value = 4.0 * e * (1.0 - t);
  z.derivative = -k * L * z.value - 4.0 * e * t * (k * std::log(2.0) / 2.0);
  z.abs_error = 8 * std::numeric_limits<double>::epsilon() * (std::abs(4.0 * e) * (1 + std::abs(t)));
  return z;
}

SuperZeta scalar_zeta_from_spectra(const Rational& alpha, const Rational& beta, cplx s) {
  const double base = std::pow(2 * M_PI, 2 * Constants::kappa) *
                      std::pow(to_double(alpha * alpha + beta * beta), Constants::kappa);
  SuperZeta z;
  z.exact = true;
  double mag = 0;
  for (int q = 0; q < 6; ++q) {
    if (!verify_scalar_spectrum(q, alpha, beta)) throw std::logic_error("scalar spectrum verification failed");
    const double w = (q % 2 ? -1.0 : 1.0) * Constants::Nq[static_cast<std::size_t>(q)];
    for (const auto& sig : expected_normalized_spectrum(q)) {
      const double lam = base * sig.to_double();
      const double l = std::log(lam);
      const cplx p = std::exp(-s * l);
      z.value += w * p;
      z.derivative += -w * l * p;
      mag += std::abs(w * p);
    }
  }
  z.abs_error = 16 * std::numeric_limits<double>::epsilon() * mag;
  return z;
}

PiScaled operator*(const PiScaled& a, const PiScaled& b) { return {a.coeff * b.coeff, a.pi_power + b.pi_power}; }

PiScaled exact_scalar_zeta_unit(const Rational& s) {
  const Rational ks = s * Constants::kappa;
  if (!is_integer(ks)) throw std::invalid_argument("exact_scalar_zeta_unit: kappa*s must be an integer");
  const long long n = static_cast<long long>(num(ks));
  // 2^{n/2}
  auto pow2 = [](long long e) {
    Rational r = 1;
    for (long long i = 0; i < std::abs(e); ++i) r *= 2;
    return e >= 0 ? r : Rational(1) / r;
  };
  const long long h = n >= 0 ? n / 2 : -((-n + 1) / 2);
  QSqrt2 root(pow2(h));
  if (n - 2 * h == 1) root = root * QSqrt2::sqrt2();
  const QSqrt2 coeff = QSqrt2(pow2(-2 * n)) * QSqrt2(4) * (QSqrt2(1) - root);
  return {coeff, static_cast<int>(-2 * n)};
}

}  // namespace nilzeta
