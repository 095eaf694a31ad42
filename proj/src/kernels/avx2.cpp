#include "nilzeta/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace nilzeta::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// exp(x) for x <= 709; returns 0 below -708.
inline __m256d vexp(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d lo_lim = _mm256_set1_pd(-708.0);
  const __m256d under = _mm256_cmp_pd(x, lo_lim, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lo_lim);
  const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
  r = _mm256_fnmadd_pd(n, ln2_lo, r);
  // Taylor to degree 13
  static const double c[] = {1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
                             1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,      1.0 / 720.0,
                             1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,         0.5,
                             1.0,                1.0};
  __m256d p = _mm256_set1_pd(c[0]);
  for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c[i]));
  const __m128i ni = _mm256_cvtpd_epi32(n);
  __m256i e = _mm256_cvtepi32_epi64(ni);
  e = _mm256_add_epi64(e, _mm256_set1_epi64x(1023));
  e = _mm256_slli_epi64(e, 52);
  const __m256d scale = _mm256_castsi256_pd(e);
  return _mm256_andnot_pd(under, _mm256_mul_pd(p, scale));
}

// log(x) for positive normal x.
inline __m256d vlog(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));
  // biased exponent as double via the 2^52 magic constant
  const __m256i ebits = _mm256_or_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x4330000000000000LL));
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(ebits), _mm256_set1_pd(4503599627370496.0 + 1023.0));
  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d f = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d f2 = _mm256_mul_pd(f, f);
  __m256d p = _mm256_set1_pd(1.0 / 23.0);
  for (int k = 10; k >= 0; --k) p = _mm256_fmadd_pd(p, f2, _mm256_set1_pd(1.0 / (2 * k + 1)));
  const __m256d logm = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), f), p);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(0.69314718055994530942), logm);
}

}  // namespace

double sum_exp_neg(const double* x, const double* w, std::size_t n, double t) {
  const __m256d mt = _mm256_set1_pd(-t);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = vexp(_mm256_mul_pd(mt, _mm256_loadu_pd(x + i)));
    acc = w ? _mm256_fmadd_pd(_mm256_loadu_pd(w + i), v, acc) : _mm256_add_pd(acc, v);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += (w ? w[i] : 1.0) * std::exp(-t * x[i]);
  return s;
}

PowSum sum_pow_neg(const double* x, std::size_t n, double s) {
  const __m256d ms = _mm256_set1_pd(-s);
  __m256d acc = _mm256_setzero_pd(), accl = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = vlog(_mm256_loadu_pd(x + i));
    const __m256d p = vexp(_mm256_mul_pd(ms, l));
    acc = _mm256_add_pd(acc, p);
    accl = _mm256_fmadd_pd(p, l, accl);
  }
  PowSum out{hsum(acc), hsum(accl)};
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
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d av = _mm256_loadu_pd(ad + 2 * i);
    const __m256d bv = _mm256_loadu_pd(bd + 2 * i);
    const __m256d are = _mm256_movedup_pd(av);
    const __m256d aim = _mm256_permute_pd(av, 0xF);
    const __m256d bsw = _mm256_permute_pd(bv, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(are, bv, _mm256_mul_pd(aim, bsw));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += a[i] * b[i];
}

}  // namespace nilzeta::kernels::avx2
