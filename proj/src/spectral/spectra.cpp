#include "nilzeta/spectral.hpp"

#include "nilzeta/kernels.hpp"

#include <Eigen/SparseCore>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace nilzeta {

namespace {

int trusted_of(std::size_t n, double frac) { return static_cast<int>(std::floor(frac * static_cast<double>(n))); }

}  // namespace

Spectrum spectrum(const Eigen::MatrixXcd& M, double trust_fraction, double sym_tol) {
  if (M.rows() != M.cols()) throw std::invalid_argument("spectrum: matrix not square");
  Spectrum out;
  if (M.rows() == 0) return out;
  const double scale = M.cwiseAbs().maxCoeff();
  const double asym = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (scale > 0 && asym > sym_tol * scale) throw SymmetrizationError("spectrum: Hermitian residual exceeded");
  const Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  out.trusted_count = trusted_of(out.eigenvalues.size(), trust_fraction);
  return out;
}

Spectrum spectrum_banded(const BlockBand& M, double trust_fraction, double sym_tol) {
  if (M.rows != M.cols) throw std::invalid_argument("spectrum_banded: operator not square");
  const int d = M.rows, n = M.n, nn = d * n;
  const int kd = d * (M.bandwidth() + 1) - 1;
  const int ldab = kd + 1;
  auto entry = [&](int I, int J) -> cplx {
    const int bi = I % d, bj = J % d;
    if (M.block_zero(bi, bj)) return 0.0;
    return M.at(bi, bj)(I / d, J / d);
  };
  std::vector<cplx> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(nn));
  double scale = 0, asym = 0;
  for (int J = 0; J < nn; ++J)
    for (int I = J; I < std::min(nn, J + kd + 1); ++I) {
      const cplx lo = entry(I, J), up = entry(J, I);
      scale = std::max({scale, std::abs(lo), std::abs(up)});
      asym = std::max(asym, std::abs(lo - std::conj(up)));
      ab[static_cast<std::size_t>(I - J) + static_cast<std::size_t>(J) * ldab] = 0.5 * (lo + std::conj(up));
    }
  if (scale > 0 && asym > sym_tol * scale) throw SymmetrizationError("spectrum_banded: Hermitian residual exceeded");
  Spectrum out;
  out.eigenvalues.resize(static_cast<std::size_t>(nn));
  cplx dummy;
  const lapack_int info =
      LAPACKE_zhbevd(LAPACK_COL_MAJOR, 'N', 'L', nn, kd, ab.data(), ldab, out.eigenvalues.data(), &dummy, 1);
  if (info != 0) throw std::runtime_error("spectrum_banded: zhbevd failed");
  out.trusted_count = trusted_of(out.eigenvalues.size(), trust_fraction);
  return out;
}

Spectrum spectrum_first_order(const RepRealization& R, int q, double trust_fraction) {
  if (q < 0 || q > 5) throw std::invalid_argument("spectrum_first_order: q out of range");
  const int d0 = kCohomologyDims[static_cast<std::size_t>(q)];
  const int N = R.N;
  std::vector<BlockBand> parts;
  if (q > 0) parts.push_back(evaluate(rumin_matrix(q - 1), R).adjoint());
  if (q < 5) parts.push_back(evaluate(rumin_matrix(q), R));
  int dr = 0, bw = 0;
  for (const auto& P : parts) {
    dr += P.rows;
    bw = std::max(bw, P.bandwidth());
  }
  const int Nr = N + bw;
  if (Nr > R.Nb) throw std::logic_error("spectrum_first_order: margin smaller than the band");
  // rows interleaved by mode index, columns restricted to the first N modes of H^q
  std::vector<Eigen::Triplet<cplx>> trip;
  int row0 = 0;
  for (const auto& P : parts) {
    for (int bi = 0; bi < P.rows; ++bi)
      for (int bj = 0; bj < P.cols; ++bj) {
        if (P.block_zero(bi, bj)) continue;
        const BandMatrix& B = P.at(bi, bj);
        for (int k = -B.lower(); k <= B.upper(); ++k) {
          const auto& dg = B.diag(k);
          for (int i = std::max(0, -k); i < Nr && i + k < N; ++i) {
            const cplx v = dg[static_cast<std::size_t>(i)];
            if (v != 0.0) trip.emplace_back(i * dr + row0 + bi, (i + k) * d0 + bj, v);
          }
        }
      }
    row0 += P.rows;
  }
  const int m = N * d0, rows = Nr * dr;
  // Givens row merging into an upper band R; R inherits the band ku of chol(A^*A)
  const int ku = d0 * (2 * bw + 1) - 1;
  const int ldab = ku + 1;
  std::vector<std::vector<std::pair<int, cplx>>> row_entries(static_cast<std::size_t>(rows));
  for (const auto& t : trip) row_entries[static_cast<std::size_t>(t.row())].emplace_back(t.col(), t.value());
  // ab holds R(i,j) at (ku + i - j) + j * ldab, the LAPACK upper band layout
  std::vector<cplx> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(m));
  auto Rij = [&](int i, int j) -> cplx& { return ab[static_cast<std::size_t>(ku + i - j) + static_cast<std::size_t>(j) * ldab]; };
  std::vector<cplx> w(static_cast<std::size_t>(m) + static_cast<std::size_t>(ldab));
  for (auto& ent : row_entries) {
    if (ent.empty()) continue;
    int a0 = m, a1 = 0;
    for (const auto& [c, v] : ent) {
      w[static_cast<std::size_t>(c)] = v;
      a0 = std::min(a0, c);
      a1 = std::max(a1, c);
    }
    if (a1 - a0 > ku) throw std::logic_error("spectrum_first_order: row wider than the band");
    for (int c = a0; c < m; ++c) {
      const cplx g = w[static_cast<std::size_t>(c)];
      if (g == 0.0) {
        if (c >= a1) break;
        continue;
      }
      const int c1 = std::min(m - 1, c + ku);
      const cplx f = Rij(c, c);
      if (f == 0.0) {
        for (int k = c; k <= c1; ++k) std::swap(Rij(c, k), w[static_cast<std::size_t>(k)]);
        for (int k = c; k <= c1; ++k) w[static_cast<std::size_t>(k)] = -w[static_cast<std::size_t>(k)];
      } else {
        const double af = std::abs(f), r = std::hypot(af, std::abs(g));
        const double cs = af / r;
        const cplx sn = (f / af) * std::conj(g) / r;
        for (int k = c; k <= c1; ++k) {
          const cplx x = Rij(c, k), y = w[static_cast<std::size_t>(k)];
          Rij(c, k) = cs * x + sn * y;
          w[static_cast<std::size_t>(k)] = -std::conj(sn) * x + cs * y;
        }
      }
      w[static_cast<std::size_t>(c)] = 0;
      a1 = std::max(a1, c1);
    }
    std::fill(w.begin() + a0, w.begin() + a1 + 1, cplx(0));
  }
  std::vector<double> d(static_cast<std::size_t>(m)), e(static_cast<std::size_t>(m));
  cplx dummy;
  lapack_int info = LAPACKE_zgbbrd(LAPACK_COL_MAJOR, 'N', m, m, 0, 0, ku, ab.data(), ldab, d.data(), e.data(), &dummy,
                                   1, &dummy, 1, &dummy, 1);
  if (info == 0)
    info = LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'U', m, 0, 0, 0, d.data(), e.data(), nullptr, 1, nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("spectrum_first_order: bidiagonal SVD failed");
  Spectrum out;
  out.eigenvalues.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(m - 1 - i)] * d[static_cast<std::size_t>(m - 1 - i)];
  out.trusted_count = trusted_of(out.eigenvalues.size(), trust_fraction);
  return out;
}

namespace {

// Removes from `from` (sorted) one nearest partner for each value in `take`.
std::vector<double> multiset_subtract(const std::vector<double>& from, const std::vector<double>& take, double tol,
                                      double window, int& unmatched) {
  std::vector<char> used(from.size(), 0);
  for (double t : take) {
    auto it = std::lower_bound(from.begin(), from.end(), t);
    std::ptrdiff_t best = -1;
    double bd = std::numeric_limits<double>::infinity();
    const std::ptrdiff_t c = it - from.begin();
    for (std::ptrdiff_t k = std::max<std::ptrdiff_t>(0, c - 8);
         k < std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(from.size()), c + 8); ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      const double dd = std::abs(from[static_cast<std::size_t>(k)] - t);
      if (dd < bd) {
        bd = dd;
        best = k;
      }
    }
    if (best >= 0 && bd <= tol * std::abs(t)) used[static_cast<std::size_t>(best)] = 1;
    else if (t <= window) ++unmatched;
  }
  std::vector<double> rest;
  for (std::size_t k = 0; k < from.size(); ++k)
    if (!used[k] && from[k] <= window) rest.push_back(from[k]);
  return rest;
}

std::vector<double> window_of(const Spectrum& s, double top) {
  std::vector<double> out;
  for (double v : s.eigenvalues)
    if (v <= top) out.push_back(v);
  return out;
}

constexpr std::size_t kMinFit = 8;

TailFit fit_tail(const std::vector<double>& mu) {
  TailFit f;
  f.count = static_cast<int>(mu.size());
  if (mu.empty()) return f;
  f.window_top = mu.back();
  const std::size_t n = mu.size();
  // short lists: unit growth exponent with the amplitude matched at the top
  f.exponent = 1.0;
  f.amplitude = static_cast<double>(n) / mu.back();
  if (n < kMinFit) return f;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = n / 2; i < n; ++i) {
    const double x = std::log(mu[i]), y = std::log(static_cast<double>(i) + 0.5);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double den = m * sxx - sx * sx;
  if (den <= 0) return f;
  f.exponent = (m * sxy - sx * sy) / den;
  f.amplitude = std::exp((sy - f.exponent * sx) / m);
  return f;
}

// Largest eigenvalue of `big` below which both truncations agree index by index.
double converged_top(const Spectrum& big, const Spectrum& small, double tol) {
  double top = 0;
  const std::size_t n = std::min(static_cast<std::size_t>(big.trusted_count), small.eigenvalues.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = big.eigenvalues[i], b = small.eigenvalues[i];
    if (std::abs(a - b) > tol * std::abs(a)) break;
    top = a;
  }
  return top;
}

bool is_scalar(const RepLabel& l) { return std::holds_alternative<ScalarLabel>(l); }

}  // namespace

RuminSpectra compute_spectra(const RepLabel& label, const SpectralConfig& cfg) {
  validate_label(label);
  RuminSpectra sp;
  sp.label = label;
  sp.config = cfg;
  if (is_scalar(label)) {
    sp.exact_scalar = true;
    const RepRealization R = realize(label, 1);
    for (int q = 0; q < 5; ++q) {
      const BlockBand D = evaluate(rumin_matrix(q), R);
      const Eigen::MatrixXcd M = (D.adjoint() * D).dense_leading(1);
      const Spectrum s = spectrum(M, 1.0, cfg.sym_tol);
      const double top = s.eigenvalues.empty() ? 0 : std::abs(s.eigenvalues.back());
      for (double v : s.eigenvalues)
        if (v > 1e-12 * top) sp.C[static_cast<std::size_t>(q)].push_back(v);
      sp.fit[static_cast<std::size_t>(q)].count = static_cast<int>(sp.C[static_cast<std::size_t>(q)].size());
    }
    return sp;
  }
  // The scalar-valued ends M_0, M_5 are solved at twice the truncation so that
  // C_0 and C_4 cover the windows of M_1 and M_4.
  const int Nsmall = cfg.N - cfg.N / 4;
  std::array<double, 6> W;
  std::array<Spectrum, 6> m;
  {
    const RepRealization Rb = realize(label, cfg.N, cfg.margin), Rs = realize(label, Nsmall, cfg.margin);
    const RepRealization Rb2 = realize(label, 2 * cfg.N, cfg.margin), Rs2 = realize(label, 2 * Nsmall, cfg.margin);
    for (int q = 0; q < 6; ++q) {
      const bool end = q == 0 || q == 5;
      const RepRealization& big = end ? Rb2 : Rb;
      const RepRealization& small = end ? Rs2 : Rs;
      m[static_cast<std::size_t>(q)] = spectrum_first_order(big, q, cfg.trust_fraction);
      const Spectrum ms = spectrum_first_order(small, q, cfg.trust_fraction);
      W[static_cast<std::size_t>(q)] = converged_top(m[static_cast<std::size_t>(q)], ms, cfg.conv_tol);
    }
  }
  // lower half: M_0 = C_0, M_1 = C_0 + C_1, M_2 = C_1 + C_2
  const double L0 = W[0];
  sp.C[0] = window_of(m[0], L0);
  const double L1 = std::min(W[1], L0);
  sp.C[1] = multiset_subtract(m[1].eigenvalues, sp.C[0], cfg.match_tol, L1, sp.unmatched);
  const double L2 = std::min(W[2], L1);
  sp.C[2] = multiset_subtract(m[2].eigenvalues, sp.C[1], cfg.match_tol, L2, sp.unmatched);
  // upper half: M_5 = C_4, M_4 = C_3 + C_4
  const double L4 = W[5];
  sp.C[4] = window_of(m[5], L4);
  const double L3 = std::min(W[4], L4);
  sp.C[3] = multiset_subtract(m[4].eigenvalues, sp.C[4], cfg.match_tol, L3, sp.unmatched);
  // M_3 = C_2 + C_3 cross-check on the common window
  {
    const double Lm = std::min({L2, L3, W[3]});
    std::vector<double> pred;
    for (double v : sp.C[2])
      if (v <= Lm) pred.push_back(v);
    for (double v : sp.C[3])
      if (v <= Lm) pred.push_back(v);
    std::sort(pred.begin(), pred.end());
    const std::vector<double> got = window_of(m[3], Lm);
    const std::size_t k = std::min(pred.size(), got.size());
    double dev = pred.size() == got.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < k; ++i) dev = std::max(dev, std::abs(pred[i] - got[i]) / std::abs(got[i]));
    sp.middle_mismatch = dev;
  }
  const std::array<double, 5> tops{L0, L1, L2, L3, L4};
  for (int q = 0; q < 5; ++q) {
    sp.fit[static_cast<std::size_t>(q)] = fit_tail(sp.C[static_cast<std::size_t>(q)]);
    sp.fit[static_cast<std::size_t>(q)].window_top = tops[static_cast<std::size_t>(q)];
  }
  return sp;
}

SuperZeta zeta_from_spectra(const RuminSpectra& sp, cplx s) {
  SuperZeta z;
  z.exact = sp.exact_scalar;
  double mag = 0;
  for (int q = 0; q < 5; ++q) {
    const auto& C = sp.C[static_cast<std::size_t>(q)];
    const double a = Constants::aq[static_cast<std::size_t>(q)];
    const double w = (q % 2 == 0 ? -1.0 : 1.0) * Constants::kq[static_cast<std::size_t>(q)];
    cplx v = 0, dv = 0;
    if (s.imag() == 0) {
      const auto ps = kernels::sum_pow_neg(C.data(), C.size(), a * s.real());
      v = ps.value;
      dv = -a * ps.log_moment;
    } else {
      for (double mu : C) {
        const double l = std::log(mu);
        const cplx p = std::exp(-a * s * l);
        v += p;
        dv += -a * l * p;
      }
    }
    z.value += w * v;
    z.derivative += w * dv;
    mag += std::abs(w * v);
    if (sp.exact_scalar) continue;
    TailFit f = sp.fit[static_cast<std::size_t>(q)];
    if (f.count == 0 && f.window_top > 0) {
      // empty window: bounded as if one eigenvalue sat at its top
      f.amplitude = 1.0 / f.window_top;
      f.exponent = 1.0;
    }
    const double sig = a * s.real();
    if (!(f.window_top > 0) || !(sig > f.exponent)) {
      z.abs_error = HUGE_VAL;
      continue;
    }
    const double tail = f.amplitude * f.exponent * std::pow(f.window_top, f.exponent - sig) / (sig - f.exponent);
    z.abs_error += std::abs(w) * tail;
  }
  z.abs_error += 16 * std::numeric_limits<double>::epsilon() * mag;
  return z;
}

SuperZeta super_zeta(const RepLabel& label, cplx s, const SpectralConfig& cfg, double tol) {
  if (const auto* sc = std::get_if<ScalarLabel>(&label)) return scalar_zeta_closed(sc->alpha, sc->beta, s);
  const SuperZeta z = zeta_from_spectra(compute_spectra(label, cfg), s);
  if (z.abs_error > tol) throw Untrusted("super_zeta: error estimate exceeds tolerance");
  return z;
}

double heat_supertrace(const RuminSpectra& sp, double t) {
  if (!(t > 0)) throw std::invalid_argument("heat_supertrace: t must be positive");
  double acc = 0;
  for (int q = 0; q < 5; ++q) {
    const auto& C = sp.C[static_cast<std::size_t>(q)];
    std::vector<double> lam(C.size());
    const int a = Constants::aq[static_cast<std::size_t>(q)];
    for (std::size_t i = 0; i < C.size(); ++i) lam[i] = std::pow(C[i], a);
    const double w = (q % 2 == 0 ? -1.0 : 1.0) * Constants::kq[static_cast<std::size_t>(q)];
    acc += w * kernels::sum_exp_neg(lam.data(), nullptr, lam.size(), t);
  }
  return acc;
}

double heat_supertrace(const RepLabel& label, double t, const SpectralConfig& cfg) {
  return heat_supertrace(compute_spectra(label, cfg), t);
}

double residue_estimate(const RuminSpectra& sp) {
  double res = 0;
  for (int q = 0; q < 5; ++q) {
    const auto& C = sp.C[static_cast<std::size_t>(q)];
    const std::size_t n = C.size();
    if (n < 4) continue;
    const double g = 1.0 / Constants::kq[static_cast<std::size_t>(q)];
    double acc = 0;
    int m = 0;
    for (std::size_t i = n / 2; i < n; ++i, ++m) acc += std::log(static_cast<double>(i) + 0.5) - g * std::log(C[i]);
    const double A = std::exp(acc / m);
    const double w = (q % 2 == 0 ? -1.0 : 1.0) * Constants::kq[static_cast<std::size_t>(q)];
    res += w * A / Constants::kappa;
  }
  return res;
}

}  // namespace nilzeta
