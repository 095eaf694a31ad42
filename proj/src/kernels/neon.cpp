#include "nilzeta/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace nilzeta::kernels::neon {

namespace {

inline float64x2_t vexp(float64x2_t x) {
  const float64x2_t lo_lim = vdupq_n_f64(-708.0);
  const uint64x2_t under = vcltq_f64(x, lo_lim);
  x = vmaxq_f64(x, lo_lim);
  const float64x2_t n = vrndnq_f64(vmulq_f64(x, vdupq_n_f64(1.4426950408889634074)));
  float64x2_t r = vfmsq_f64(x, n, vdupq_n_f64(6.93145751953125e-1));
  r = vfmsq_f64(r, n, vdupq_n_f64(1.42860682030941723212e-6));
  static const double c[] = {1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
                             1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,      1.0 / 720.0,
                             1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,         0.5,
                             1.0,                1.0};
  float64x2_t p = vdupq_n_f64(c[0]);
  for (int i = 1; i < 14; ++i) p = vfmaq_f64(vdupq_n_f64(c[i]), p, r);
  int64x2_t e = vaddq_s64(vcvtq_s64_f64(n), vdupq_n_s64(1023));
  const float64x2_t scale = vreinterpretq_f64_s64(vshlq_n_s64(e, 52));
  const float64x2_t res = vmulq_f64(p, scale);
  return vreinterpretq_f64_u64(vbicq_u64(vreinterpretq_u64_f64(res), under));
}

inline float64x2_t vlog(float64x2_t x) {
  const uint64x2_t bits = vreinterpretq_u64_f64(x);
  float64x2_t m = vreinterpretq_f64_u64(
      vorrq_u64(vandq_u64(bits, vdupq_n_u64(0x000FFFFFFFFFFFFFULL)), vdupq_n_u64(0x3FF0000000000000ULL)));
  float64x2_t e = vsubq_f64(vcvtq_f64_u64(vshrq_n_u64(bits, 52)), vdupq_n_f64(1023.0));
  const uint64x2_t big = vcgtq_f64(m, vdupq_n_f64(1.4142135623730951));
  m = vbslq_f64(big, vmulq_f64(m, vdupq_n_f64(0.5)), m);
  e = vaddq_f64(e, vreinterpretq_f64_u64(vandq_u64(big, vreinterpretq_u64_f64(vdupq_n_f64(1.0)))));
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t f = vdivq_f64(vsubq_f64(m, one), vaddq_f64(m, one));
  const float64x2_t f2 = vmulq_f64(f, f);
  float64x2_t p = vdupq_n_f64(1.0 / 23.0);
  for (int k = 10; k >= 0; --k) p = vfmaq_f64(vdupq_n_f64(1.0 / (2 * k + 1)), p, f2);
  const float64x2_t logm = vmulq_f64(vmulq_f64(vdupq_n_f64(2.0), f), p);
  return vfmaq_f64(logm, e, vdupq_n_f64(0.69314718055994530942));
}

}  // namespace

double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) {
  const float64x2_t mt = vdupq_n_f64(-t);
  float64x2_t acc = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vexp(vmulq_f64(mt, vld1q_f64(x + i)));
    acc = w ? vfmaq_f64(acc, vld1q_f64(w + i), v) : vaddq_f64(acc, v);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += (w ? w[i] : 1.0) * std::exp(-t * x[i]);
  return s;
}

PowSum sum_pow_neg(const double* x, std::size_t n, double s) {
  const float64x2_t ms = vdupq_n_f64(-s);
  float64x2_t acc = vdupq_n_f64(0), accl = vdupq_n_f64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t l = vlog(vld1q_f64(x + i));
    const float64x2_t p = vexp(vmulq_f64(ms, l));
    acc = vaddq_f64(acc, p);
    accl = vfmaq_f64(accl, p, l);
  }
  PowSum out{vaddvq_f64(acc), vaddvq_f64(accl)};
  for (; i < n; ++i) {
    const double l = std::log(x[i]);
    const double p = std::exp(-s * l);
    out.value += p;
    out.log_moment += p * l;
  }
  return out;
}

void cmul_acc(std::complex<double>* y, const std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
  double* yd = reinterpret_cast<double*>(y);
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t av = vld1q_f64(ad + 2 * i);
    const float64x2_t bv = vld1q_f64(bd + 2 * i);
    const float64x2_t bsw = vextq_f64(bv, bv, 1);
    const float64x2_t re = vmulq_laneq_f64(bv, av, 0);   // (ar*br, ar*bi)
    float64x2_t im = vmulq_laneq_f64(bsw, av, 1);        // (ai*bi, ai*br)
    im = vmulq_f64(im, (float64x2_t){-1.0, 1.0});
    vst1q_f64(yd + 2 * i, vaddq_f64(vld1q_f64(yd + 2 * i), vaddq_f64(re, im)));
  }
}

}  // namespace nilzeta::kernels::neon
