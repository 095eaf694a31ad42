#pragma once

// Brute-force enumeration of the multiplicity rules, written against the lattice-spec
// conditions directly: no dual lattice, no (lambda0, mu0), exhaustive search over k.

#include "nilzeta/lattice.hpp"

#include <boost/integer/common_factor.hpp>

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

using nilzeta::Character;
using nilzeta::LatticeSpec;
using nilzeta::Rational;

enum class Kind { Scalar, Schrodinger, Generic };
using Key = std::tuple<int, std::vector<Rational>>;

inline bool integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline std::map<Key, Rational> decompose(const LatticeSpec& s, const Character& chi, double cutoff) {
  std::map<Key, Rational> out;
  const Rational r(s.r);
  const bool derived_trivial = integral(chi.c / r) && integral(chi.phi4) && integral(chi.phi5);
  const bool center_trivial = integral(chi.c) && integral(chi.phi4) && integral(chi.phi5);
  const long long B = static_cast<long long>(std::ceil(cutoff)) + 2;
  const double R2 = cutoff * cutoff;

  if (derived_trivial)
    for (long long i = -B; i <= B; ++i)
      for (long long j = -B; j <= B; ++j) {
        const Rational al = chi.a + i, be = chi.b + j;
        if (nilzeta::to_double(al * al + be * be) <= R2 + 1e-12) out[{0, {al, be}}] += 1;
      }

  if (center_trivial)
    for (long long j = -B; j <= B; ++j) {
      const Rational h = chi.c + r * j;
      if (h != 0 && nilzeta::to_double(abs(h)) <= cutoff + 1e-12) out[{1, {h}}] += abs(h);
    }

  for (long long lam = -B; lam <= B; ++lam)
    for (long long mu = -B; mu <= B; ++mu) {
      if (lam == 0 && mu == 0) continue;
      if (static_cast<double>(lam * lam + mu * mu) > R2 + 1e-12) continue;
      const Rational L(lam), M(mu);
      if (!integral(L / r) || !integral(M / r)) continue;
      if (!integral(L * (s.u - 1) / 2 + M * (s.v - 1) / 2 - chi.c)) continue;
      if (!integral(L * s.e + M * s.f - chi.phi4) || !integral(L * s.g + M * s.h - chi.phi5)) continue;
      const long long d = boost::integer::gcd(std::llabs(lam), std::llabs(mu));
      const Rational w = chi.c - L * (s.u - 1) / 2 - M * (s.v - 1) / 2;
      const Rational t = 2 * w - (L + M) + L * M / d;
      const Rational nu0 = 2 * (chi.a * M - chi.b * L) + L * L * M * M / (12 * d * d) + t * t / 4;
      const long long period = d / s.r;
      // nu = nu0 + r j with |nu| <= cutoff^2; count k in [0, d/r) hitting nu modulo 2d
      const long long J = static_cast<long long>(std::ceil((R2 + std::abs(nilzeta::to_double(nu0))) / s.r)) + 1;
      for (long long j = -J; j <= J; ++j) {
        const Rational nu = nu0 + r * j;
        if (std::abs(nilzeta::to_double(nu)) > R2 + 1e-12) continue;
        long long count = 0;
        for (long long k = 0; k < period; ++k) {
          const Rational diff = nu - nu0 - r * k * (r * k + d) - 2 * r * k * w;
          if (integral(diff / (2 * d))) ++count;
        }
        if (count) out[{2, {L, M, nu}}] += count;
      }
    }
  return out;
}

}  // namespace oracle
