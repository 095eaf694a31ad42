#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

// Hot loops with a scalar reference and SIMD variants chosen at runtime.
namespace nilzeta::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string isa_name(Isa isa);
std::vector<Isa> available_isas();  // always contains Scalar
Isa active_isa();                   // NILZETA_SIMD=scalar|avx2|neon overrides auto-detection
void set_active_isa(Isa isa);       // throws if not available

// sum_i w_i exp(-t x_i); w may be null (all ones).
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t);
// sum_i x_i^{-s} and sum_i x_i^{-s} log x_i for x_i > 0, real s.
struct PowSum {
  double value = 0;
  double log_moment = 0;
};
PowSum sum_pow_neg(const double* x, std::size_t n, double s);
// y_i += a_i * b_i over complex arrays.
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n);

// Per-ISA entry points, used by the dispatcher and the equivalence tests.
namespace scalar {
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t);
PowSum sum_pow_neg(const double* x, std::size_t n, double s);
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
}  // namespace scalar
namespace avx2 {
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t);
PowSum sum_pow_neg(const double* x, std::size_t n, double s);
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
}  // namespace avx2
namespace neon {
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t);
PowSum sum_pow_neg(const double* x, std::size_t n, double s);
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
}  // namespace neon

}  // namespace nilzeta::kernels
