#include "nilzeta/kernels.hpp"

#include <cmath>

namespace nilzeta::kernels::scalar {

double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) {
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += (w ? w[i] : 1.0) * std::exp(-t * x[i]);
  return acc;
}

PowSum sum_pow_neg(const double* x, std::size_t n, double s) {
  PowSum out;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = std::log(x[i]);
    const double p = std::exp(-s * l);
    out.value += p;
    out.log_moment += p * l;
  }
  return out;
}

void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag(), br = b[i].real(), bi = b[i].imag();
    y[i] += std::complex<double>(ar * br - ai * bi, ar * bi + ai * br);
  }
}

}  // namespace nilzeta::kernels::scalar
