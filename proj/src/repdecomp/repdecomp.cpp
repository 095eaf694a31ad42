#include "nilzeta/repdecomp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nilzeta {

void validate_label(const RepLabel& l) {
  if (auto* s = std::get_if<SchrodingerLabel>(&l)) {
    if (!(s->hbar != 0) || !std::isfinite(s->hbar)) throw std::invalid_argument("Schrodinger label needs hbar != 0");
  } else if (auto* g = std::get_if<GenericLabel>(&l)) {
    if (!(g->lambda * g->lambda + g->mu * g->mu > 0)) throw std::invalid_argument("Generic label needs (lambda,mu) != 0");
  }
}

std::string label_type(const RepLabel& l) {
  switch (l.index()) {
    case 0: return "scalar";
    case 1: return "schrodinger";
    default: return "generic";
  }
}

std::string to_string(const RepLabel& l) {
  std::ostringstream os;
  os.precision(17);
  if (auto* s = std::get_if<ScalarLabel>(&l)) os << "Scalar(" << s->alpha << "," << s->beta << ")";
  else if (auto* h = std::get_if<SchrodingerLabel>(&l)) os << "Schrodinger(" << h->hbar << ")";
  else {
    auto& g = std::get<GenericLabel>(l);
    os << "Generic(" << g.lambda << "," << g.mu << "," << g.nu << ")";
  }
  return os.str();
}

RepLabel ExactLabel::numeric() const {
  switch (kind) {
    case Kind::Scalar: return ScalarLabel{to_double(params.at(0)), to_double(params.at(1))};
    case Kind::Schrodinger: return SchrodingerLabel{to_double(params.at(0))};
    case Kind::Generic: return GenericLabel{to_double(params.at(0)), to_double(params.at(1)), to_double(params.at(2))};
  }
  return ScalarLabel{};
}

bool operator<(const ExactLabel& a, const ExactLabel& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.params < b.params;
}

long long mult_count(long long l, long long r, long long w, long long n) {
  if (l < 1 || r < 1) throw std::invalid_argument("mult_count: l, r must be >= 1");
  const __int128 m = 2 * static_cast<__int128>(l);
  long long count = 0;
  for (long long k = 0; k < l; ++k) {
    __int128 v = static_cast<__int128>(r) * k * (k + l) + 2 * static_cast<__int128>(w) * k - n;
    if (v % m == 0) ++count;
  }
  return count;
}

namespace {

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite cutoff");
  int e = 0;
  double m = std::frexp(x, &e);
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rational r(mant);
  BigInt p = 1;
  for (int i = 0; i < std::abs(e); ++i) p *= 2;
  return e >= 0 ? r * Rational(p) : r / Rational(p);
}

BigInt iabs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt ceil_r(const Rational& x) { return -floor(-x); }

}  // namespace

Rational w_of(const LatticeSpec& spec, const Character& chi, const BigInt& lambda, const BigInt& mu) {
  return chi.c - Rational(lambda) * (spec.u - 1) / 2 - Rational(mu) * (spec.v - 1) / 2;
}

Rational nu0_of(const LatticeSpec& spec, const Character& chi, const BigInt& lambda, const BigInt& mu) {
  if (lambda == 0 && mu == 0) throw std::invalid_argument("nu0_of: (lambda,mu) = (0,0)");
  const Rational d(gcd(iabs(lambda), iabs(mu)));
  const Rational L(lambda), M(mu);
  const Rational w = w_of(spec, chi, lambda, mu);
  const Rational t = 2 * w - (L + M) + L * M / d;
  return 2 * (chi.a * M - chi.b * L) + L * L * M * M / (12 * d * d) + t * t / 4;
}

int scalar_mult(const LatticeSpec& spec, const Character& chi, const Rational& alpha, const Rational& beta) {
  return trivial_on_derived(spec, chi) && is_integer(alpha - chi.a) && is_integer(beta - chi.b) ? 1 : 0;
}

Rational schrodinger_mult(const LatticeSpec& spec, const Character& chi, const Rational& hbar) {
  if (hbar == 0) throw std::invalid_argument("schrodinger_mult: hbar = 0");
  if (!trivial_on_center(spec, chi)) return 0;
  if (!is_integer((hbar - chi.c) / Rational(spec.r))) return 0;
  return hbar < 0 ? Rational(-hbar) : hbar;
}

bool generic_admissible(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu) {
  if (lambda == 0 && mu == 0) return false;
  const auto [l0, m0] = solve_lambda_mu0(spec, chi);
  const PlanarLattice dual = gamma_double_prime(spec).dual();
  return dual.contains({lambda - Rational(l0), mu - Rational(m0)});
}

namespace {

long long count_k(long long r, const BigInt& d, const BigInt& w, const BigInt& delta) {
  const BigInt period = d / r;
  const BigInt mod = 2 * d;
  long long count = 0;
  for (BigInt k = 0; k < period; ++k) {
    BigInt v = delta - r * k * (r * k + d) - 2 * r * k * w;
    if (mod_floor(v, mod) == 0) ++count;
  }
  return count;
}

}  // namespace

long long generic_mult(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu,
                       const Rational& nu) {
  if (!generic_admissible(spec, chi, lambda, mu)) return 0;
  const BigInt L = num(lambda), M = num(mu);
  const BigInt d = gcd(iabs(L), iabs(M));
  const Rational delta = nu - nu0_of(spec, chi, L, M);
  if (!is_integer(delta / Rational(spec.r))) return 0;
  const Rational w = w_of(spec, chi, L, M);
  if (!is_integer(w)) throw std::logic_error("generic_mult: w not integral for admissible (lambda,mu)");
  return count_k(spec.r, d, num(w), num(delta));
}

long long generic_mult(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu,
                       double nu, double tol) {
  if (!generic_admissible(spec, chi, lambda, mu)) return 0;
  const BigInt L = num(lambda), M = num(mu);
  const double delta = nu - to_double(nu0_of(spec, chi, L, M));
  const double q = delta / static_cast<double>(spec.r);
  const double qr = std::round(q);
  if (std::abs(q - qr) > tol * std::max(1.0, std::abs(q))) return 0;
  const BigInt d = gcd(iabs(L), iabs(M));
  const Rational w = w_of(spec, chi, L, M);
  return count_k(spec.r, d, num(w), BigInt(static_cast<long long>(qr)) * spec.r);
}

std::vector<std::pair<BigInt, BigInt>> generic_centers(const LatticeSpec& spec, const Character& chi, double radius) {
  const auto [l0, m0] = solve_lambda_mu0(spec, chi);
  const PlanarLattice dual = gamma_double_prime(spec).dual();
  const auto& d1 = dual.basis[0];
  const auto& d2 = dual.basis[1];
  const double n1 = std::hypot(to_double(d1[0]), to_double(d1[1]));
  const double n2 = std::hypot(to_double(d2[0]), to_double(d2[1]));
  const double det = to_double(dual.covolume());
  const double reach = radius + std::hypot(to_double(Rational(l0)), to_double(Rational(m0)));
  const long long M1 = static_cast<long long>(std::ceil(reach * n2 / det)) + 1;
  const long long M2 = static_cast<long long>(std::ceil(reach * n1 / det)) + 1;
  const Rational R2 = exact_from_double(radius) * exact_from_double(radius);
  std::vector<std::pair<BigInt, BigInt>> out;
  for (long long m = -M1; m <= M1; ++m)
    for (long long n = -M2; n <= M2; ++n) {
      const Rational lam = Rational(l0) + m * d1[0] + n * d2[0];
      const Rational mu = Rational(m0) + m * d1[1] + n * d2[1];
      const Rational nrm = lam * lam + mu * mu;
      if (nrm == 0 || nrm > R2) continue;
      out.emplace_back(num(lam), num(mu));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecompositionTerm> decompose(const LatticeSpec& spec, const Character& chi, double cutoff) {
  if (!character_validate(spec, chi)) throw std::invalid_argument("decompose: invalid character");
  if (!(cutoff > 0)) throw std::invalid_argument("decompose: cutoff must be positive");
  const Rational R = exact_from_double(cutoff);
  const Rational R2 = R * R;
  std::vector<DecompositionTerm> out;

  if (trivial_on_derived(spec, chi)) {
    for (BigInt i = ceil_r(-R - chi.a); Rational(i) <= R - chi.a; ++i)
      for (BigInt j = ceil_r(-R - chi.b); Rational(j) <= R - chi.b; ++j) {
        const Rational al = chi.a + Rational(i), be = chi.b + Rational(j);
        if (al * al + be * be > R2) continue;
        out.push_back({{ExactLabel::Kind::Scalar, {al, be}}, 1});
      }
  }
  if (trivial_on_center(spec, chi)) {
    const Rational r(spec.r);
    for (BigInt j = ceil_r((-R - chi.c) / r); Rational(j) <= (R - chi.c) / r; ++j) {
      const Rational hb = chi.c + r * Rational(j);
      if (hb == 0) continue;
      out.push_back({{ExactLabel::Kind::Schrodinger, {hb}}, schrodinger_mult(spec, chi, hb)});
    }
  }
  for (const auto& [L, M] : generic_centers(spec, chi, cutoff)) {
    const Rational nu0 = nu0_of(spec, chi, L, M);
    const Rational r(spec.r);
    for (BigInt n = ceil_r((-R2 - nu0) / r); Rational(n) <= (R2 - nu0) / r; ++n) {
      const Rational nu = nu0 + r * Rational(n);
      const long long m = generic_mult(spec, chi, Rational(L), Rational(M), nu);
      if (m > 0) out.push_back({{ExactLabel::Kind::Generic, {Rational(L), Rational(M), nu}}, m});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) { return a.label < b.label; });
  return out;
}

}  // namespace nilzeta
