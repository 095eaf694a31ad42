#include "nilzeta/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace nilzeta::kernels {

std::string isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
#if defined(NILZETA_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) out.push_back(Isa::Avx2);
#endif
#if defined(NILZETA_HAVE_NEON)
  out.push_back(Isa::Neon);
#endif
  return out;
}

namespace {

Isa detect() {
  const auto avail = available_isas();
  if (const char* env = std::getenv("NILZETA_SIMD")) {
    for (Isa i : avail)
      if (isa_name(i) == env) return i;
    return Isa::Scalar;
  }
  return avail.back();
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  const auto avail = available_isas();
  if (std::find(avail.begin(), avail.end(), isa) == avail.end())
    throw std::invalid_argument("kernel ISA not available: " + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

#if !defined(NILZETA_HAVE_AVX2)
namespace avx2 {
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) { return scalar::sum_exp_neg(x, w, n, t); }
PowSum sum_pow_neg(const double* x, std::size_t n, double s) { return scalar::sum_pow_neg(x, n, s); }
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  scalar::cmul_acc(y, a, b, n);
}
}  // namespace avx2
#endif
#if !defined(NILZETA_HAVE_NEON)
namespace neon {
double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) { return scalar::sum_exp_neg(x, w, n, t); }
PowSum sum_pow_neg(const double* x, std::size_t n, double s) { return scalar::sum_pow_neg(x, n, s); }
void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  scalar::cmul_acc(y, a, b, n);
}
}  // namespace neon
#endif

double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::sum_exp_neg(x, w, n, t);
    case Isa::Neon: return neon::sum_exp_neg(x, w, n, t);
    default: return scalar::sum_exp_neg(x, w, n, t);
  }
}

PowSum sum_pow_neg(const double* x, std::size_t n, double s) {
  switch (active_isa()) {
    case Isa::Avx2: return avx2::sum_pow_neg(x, n, s);
    case Isa::Neon: return neon::sum_pow_neg(x, n, s);
    default: return scalar::sum_pow_neg(x, n, s);
  }
}

void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  switch (active_isa()) {
    case Isa::Avx2: avx2::cmul_acc(y, a, b, n); break;
    case Isa::Neon: neon::cmul_acc(y, a, b, n); break;
    default: scalar::cmul_acc(y, a, b, n);
  }
}

}  // namespace nilzeta::kernels
