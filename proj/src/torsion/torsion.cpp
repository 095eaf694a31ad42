#include "nilzeta/torsion.hpp"

#include <cmath>

namespace nilzeta {

namespace {

constexpr double kKappa = Constants::kappa;

std::vector<double> cache_key(const RepLabel& l) {
  if (const auto* s = std::get_if<ScalarLabel>(&l)) return {0, s->alpha, s->beta};
  if (const auto* h = std::get_if<SchrodingerLabel>(&l)) return {1, h->hbar};
  const auto& g = std::get<GenericLabel>(l);
  return {2, g.lambda, g.mu, g.nu};
}

void require_valid(const LatticeSpec& spec, const Character& chi) {
  spec.validate();
  if (!character_validate(spec, chi)) throw std::invalid_argument("invalid character");
}

ZetaValue zero_value() {
  ZetaValue z;
  z.derivative = cplx(0);
  return z;
}

cplx deriv_or_zero(const ZetaValue& z) { return z.derivative.value_or(cplx(0)); }

bool has_generic_part(const LatticeSpec& spec, const Character& chi) {
  try {
    (void)solve_lambda_mu0(spec, chi);
    return true;
  } catch (const NotFound&) {
    return false;
  }
}

ZetaValue scale_add(ZetaValue acc, const ZetaValue& z, double m) {
  acc.value += m * z.value;
  acc.derivative = deriv_or_zero(acc) + m * deriv_or_zero(z);
  acc.abs_error += std::abs(m) * z.abs_error;
  return acc;
}

struct GenericClass {
  Rational norm2, nu;
  bool operator<(const GenericClass& o) const { return norm2 != o.norm2 ? norm2 < o.norm2 : nu < o.nu; }
};

// Rotating (lambda, mu) onto the first axis leaves the spectra unchanged.
GenericLabel axis_representative(const GenericClass& c) {
  return GenericLabel{std::sqrt(to_double(c.norm2)), 0.0, to_double(c.nu)};
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::PaperTrusted: return "paper-trusted";
    case Provenance::Numeric: return "numeric";
  }
  return "?";
}

const RuminSpectra& SpectralCache::get(const RepLabel& label) {
  const auto key = cache_key(label);
  auto it = store_.find(key);
  if (it == store_.end()) it = store_.emplace(key, compute_spectra(label, cfg_)).first;
  return it->second;
}

ZetaValue to_zeta_value(const SuperZeta& z) {
  ZetaValue v;
  v.value = z.value;
  v.derivative = z.derivative;
  v.abs_error = z.abs_error;
  return v;
}

ZetaValue zeta_I(const LatticeSpec& spec, const Character& chi, cplx s, const ZetaOptions& opt) {
  require_valid(spec, chi);
  if (!trivial_on_derived(spec, chi)) return zero_value();
  if (std::abs(s - 1.0 / kKappa) < kPoleGuard) throw AtPole("zeta_I: pole at s = 1/kappa");
  const ZetaValue E = epstein_2d(2.0 * kKappa * s, ShiftedLattice2::standard(chi.a, chi.b), opt);
  const SuperZeta Z = scalar_zeta_closed(1.0, 0.0, s);
  ZetaValue out;
  out.value = E.value * Z.value;
  if (opt.want_derivative) out.derivative = 2.0 * kKappa * deriv_or_zero(E) * Z.value + E.value * Z.derivative;
  out.abs_error = E.abs_error * std::abs(Z.value);
  return out;
}

ZetaValue zeta_II(const LatticeSpec& spec, const Character& chi, cplx s, SpectralCache& cache, const ZetaOptions& opt) {
  require_valid(spec, chi);
  if (!trivial_on_center(spec, chi)) return zero_value();
  if (std::abs(s - 2.0 / kKappa) < kPoleGuard) throw AtPole("zeta_II: pole at s = 2/kappa");
  const Rational a = chi.c / Rational(spec.r);
  if (is_integer(a) && std::abs(s - 1.0 / kKappa) < kPoleGuard) throw AtPole("zeta_II: pole at s = 1/kappa");
  const ZetaValue E = epstein_1d(kKappa * s - 1.0, a, opt);
  const double r = static_cast<double>(spec.r);
  const cplx pref = std::exp((1.0 - kKappa * s) * std::log(r));
  const cplx dpref = -kKappa * std::log(r) * pref;
  ZetaValue out = zero_value();
  if (s == cplx(0)) return out;  // zeta_{rho_1}(0) = zeta'_{rho_1}(0) = 0, imported
  const SuperZeta Z = zeta_from_spectra(cache.get(SchrodingerLabel{1.0}), s);
  out.value = pref * E.value * Z.value;
  if (opt.want_derivative)
    out.derivative = dpref * E.value * Z.value + pref * kKappa * deriv_or_zero(E) * Z.value + pref * E.value * Z.derivative;
  out.abs_error = std::abs(pref) * (std::abs(E.value) * Z.abs_error + E.abs_error * std::abs(Z.value));
  return out;
}

ShiftedLattice2 dual_shifted_lattice(const LatticeSpec& spec, const Character& chi) {
  const auto [l0, m0] = solve_lambda_mu0(spec, chi);
  const PlanarLattice D = gamma_double_prime(spec).dual();
  const auto& d1 = D.basis[0];
  const auto& d2 = D.basis[1];
  ShiftedLattice2 L;
  L.gram = {{{d1[0] * d1[0] + d1[1] * d1[1], d1[0] * d2[0] + d1[1] * d2[1]},
             {d1[0] * d2[0] + d1[1] * d2[1], d2[0] * d2[0] + d2[1] * d2[1]}}};
  L.shift = D.real_coordinates({Rational(l0), Rational(m0)});
  return L;
}

ZetaIIIResult zeta_III_structural(const LatticeSpec& spec, const Character& chi, cplx s, SpectralCache& cache,
                                  const TorsionOptions& opt) {
  require_valid(spec, chi);
  ZetaIIIResult res;
  if (!has_generic_part(spec, chi)) {
    res.direct = zero_value();
    res.epstein_factor = zero_value();
    res.factors.push_back({"generic part", cplx(0), Provenance::Exact, "no admissible central parameters"});
    return res;
  }
  res.epstein_factor = epstein_2d((2.0 * kKappa * s - 4.0) / 3.0, dual_shifted_lattice(spec, chi), opt.zeta);
  res.factors.push_back({"1/r", cplx(1.0 / static_cast<double>(spec.r)), Provenance::Exact, ""});
  res.factors.push_back({"Z_dual((2 kappa s - 4)/3; lambda0, mu0)", res.epstein_factor.value, Provenance::Numeric,
                         "Epstein zeta of the dual lattice"});
  res.factors.push_back({"f(s)", std::nullopt, Provenance::PaperTrusted, "not computed; f(0) = f'(0) = 0 imported"});
  res.factors.push_back({"R_hat(s)", std::nullopt, Provenance::PaperTrusted,
                         "not computed; R_hat(0) = R_hat'(0) = 0 imported"});

  const double abscissa = Constants::homogeneous_dimension / (2.0 * kKappa);
  if (!(s.real() > abscissa + kPoleGuard)) return res;

  std::map<GenericClass, Rational> mult;
  double outer = 0.75 * opt.cutoff;
  std::map<GenericClass, bool> in_shell;
  for (const auto& t : decompose(spec, chi, opt.cutoff)) {
    if (t.label.kind != ExactLabel::Kind::Generic) continue;
    const auto& p = t.label.params;
    const GenericClass c{p[0] * p[0] + p[1] * p[1], p[2]};
    mult[c] += t.multiplicity;
    const double rad = std::max(std::sqrt(to_double(c.norm2)), std::sqrt(std::abs(to_double(c.nu))));
    if (rad > outer) in_shell[c] = true;
    ++res.terms;
  }
  ZetaValue total = zero_value();
  cplx shell = 0;
  for (const auto& [c, m] : mult) {
    const ZetaValue z = to_zeta_value(zeta_from_spectra(cache.get(axis_representative(c)), s));
    total = scale_add(total, z, to_double(m));
    if (in_shell.count(c)) shell += to_double(m) * z.value;
  }
  res.distinct_spectra = static_cast<int>(mult.size());
  res.spectral_error = total.abs_error;
  res.shell_share = std::abs(total.value) > 0 ? std::abs(shell) / std::abs(total.value) : 0.0;
  res.direct = total;
  if (res.shell_share > opt.cutoff_tol)
    throw CutoffInsufficient("zeta_III: outer shell exceeds the cutoff tolerance; raise the cutoff");
  return res;
}

TorsionReport torsion_report(const LatticeSpec& spec, const Character& chi) {
  require_valid(spec, chi);
  TorsionReport rep;
  const double two_kappa_log2 = 2.0 * kKappa * std::log(2.0);
  const double res_scalar = (1.0 - std::sqrt(2.0)) / (M_PI * kKappa);

  // zeta_I = Z_2d(2 kappa s; a, b) * zeta_{1,0}(s); zeta_{1,0}(0) = 0, zeta'_{1,0}(0) = -2 kappa log 2
  rep.zetaI0 = {"zetaI(0)", 0.0, Provenance::Exact, ""};
  if (trivial_on_derived(spec, chi)) {
    const bool integral = is_integer(chi.a) && is_integer(chi.b);
    rep.zetaI_prime0 = {"zetaI'(0)", integral ? two_kappa_log2 : 0.0, Provenance::Exact,
                        integral ? "Z_2d(0) = -1 at integral shift" : "Z_2d(0) = 0 at non-integral shift"};
    rep.poles.push_back({"zetaI", 1.0 / kKappa, res_scalar, Provenance::Exact,
                         "(pi/kappa) zeta_{1,0}(1/kappa) = (1 - sqrt2)/(pi kappa)"});
  } else {
    rep.zetaI_prime0 = {"zetaI'(0)", 0.0, Provenance::Exact, "vanishes identically"};
  }

  if (trivial_on_center(spec, chi)) {
    const Rational a = chi.c / Rational(spec.r);
    const Rational e1m1 = -bernoulli2(a - floor(a));
    rep.zetaII0 = {"zetaII(0)", 0.0, Provenance::PaperTrusted,
                   "zeta_{rho_1}(0) = 0 imported; Z_1d(-1; c/r) = " + to_string(e1m1)};
    rep.zetaII_prime0 = {"zetaII'(0)", 0.0, Provenance::PaperTrusted,
                         "zeta_{rho_1}(0) = zeta'_{rho_1}(0) = 0 imported"};
    rep.poles.push_back({"zetaII", 2.0 / kKappa, std::nullopt, Provenance::Numeric,
                         "(2/(kappa r)) zeta_{rho_1}(2/kappa); needs a spectral solve"});
    if (is_integer(a))
      rep.poles.push_back({"zetaII", 1.0 / kKappa, -res_scalar, Provenance::PaperTrusted,
                           "Z_1d(0) = -1 times the imported residue of zeta_{rho_1}"});
  } else {
    rep.zetaII0 = {"zetaII(0)", 0.0, Provenance::Exact, "vanishes identically"};
    rep.zetaII_prime0 = {"zetaII'(0)", 0.0, Provenance::Exact, "vanishes identically"};
  }

  if (has_generic_part(spec, chi)) {
    rep.zetaIII0 = {"zetaIII(0)", 0.0, Provenance::PaperTrusted, "imported"};
    rep.zetaIII_prime0 = {"zetaIII'(0)", 0.0, Provenance::PaperTrusted, "imported; f and R_hat vanish at 0"};
    rep.poles.push_back({"zetaIII", Constants::homogeneous_dimension / (2.0 * kKappa), std::nullopt,
                         Provenance::PaperTrusted, "residue involves f; vanishing not ruled out"});
  } else {
    rep.zetaIII0 = {"zetaIII(0)", 0.0, Provenance::Exact, "vanishes identically"};
    rep.zetaIII_prime0 = {"zetaIII'(0)", 0.0, Provenance::Exact, "vanishes identically"};
  }

  rep.log_tau = (rep.zetaI_prime0.value + rep.zetaII_prime0.value + rep.zetaIII_prime0.value) / (2.0 * kKappa);
  rep.tau = std::exp(rep.log_tau);
  rep.acyclic = !is_trivial(spec, chi);
  for (const auto* t : {&rep.zetaI_prime0, &rep.zetaII_prime0, &rep.zetaIII_prime0})
    rep.provenance.push_back(t->name + ": " + to_string(t->provenance));
  if (!rep.acyclic) rep.provenance.push_back("total: trivial character, not acyclic");
  return rep;
}

std::vector<CheckRow> consistency_checks(const SpectralConfig& cfg, bool numeric_residue) {
  std::vector<CheckRow> rows;
  const Rational k(Constants::kappa);
  {
    const PiScaled lhs = PiScaled{QSqrt2(Rational(1) / k), 1} * exact_scalar_zeta_unit(Rational(1) / k);
    const PiScaled rhs{(QSqrt2(1) - QSqrt2::sqrt2()) * QSqrt2(Rational(1) / k), -1};
    rows.push_back({"(pi/kappa) zeta_{1,0}(1/kappa) = (1-sqrt2)/(pi kappa)", lhs == rhs, true, 0, 0,
                    "lhs " + to_string(lhs.coeff) + " pi^" + std::to_string(lhs.pi_power)});
  }
  {
    const QSqrt2 r = QSqrt2(1) - QSqrt2::sqrt2();
    rows.push_back({"residue sign 1 - sqrt2 < 0", r.sign() < 0, true, r.to_double(), 0, "exact"});
  }
  {
    const LatticeSpec g0 = LatticeSpec::gamma0();
    const Character triv = Character::trivial();
    ZetaOptions zo;
    zo.want_derivative = false;
    const cplx res = numerical_residue([&](cplx s) { return zeta_I(g0, triv, s, zo).value; }, 1.0 / kKappa, 1e-3);
    const double expect = (1.0 - std::sqrt(2.0)) / (M_PI * kKappa);
    const double dev = std::abs(res - expect);
    rows.push_back({"numeric residue of zetaI at 1/kappa", dev < 1e-8, true, dev, 1e-8, "trivial character on Gamma0"});
  }
  rows.push_back({"residue identity involving f", false, false, 0, 0, "not checkable: f is not computed"});
  rows.push_back({"homogeneous residue identity involving f", false, false, 0, 0, "not checkable: f is not computed"});
  if (numeric_residue) {
    const RuminSpectra sp = compute_spectra(SchrodingerLabel{1.0}, cfg);
    const double est = residue_estimate(sp);
    const double expect = (1.0 - std::sqrt(2.0)) / (M_PI * kKappa);
    const double rel = std::abs(est - expect) / std::abs(expect);
    rows.push_back({"numeric residue of zeta_{rho_1} at 1/kappa", rel < 0.1, false, rel, 0.1,
                    "N = " + std::to_string(cfg.N) + ", estimate " + std::to_string(est)});
  }
  return rows;
}

DecompositionCheck decomposition_identity_check(const LatticeSpec& spec, const Character& chi, double s,
                                                const TorsionOptions& opt) {
  require_valid(spec, chi);
  DecompositionCheck out;
  out.s = s;
  SpectralCache factor_cache(opt.spectral), direct_cache(opt.spectral);

  const ZetaValue zI = zeta_I(spec, chi, s, opt.zeta);
  const ZetaValue zII = zeta_II(spec, chi, s, factor_cache, opt.zeta);
  TorsionOptions o3 = opt;
  o3.cutoff_tol = HUGE_VAL;
  const ZetaIIIResult zIII = zeta_III_structural(spec, chi, s, factor_cache, o3);
  out.factor_side = zI.value + zII.value + zIII.direct.value_or(zero_value()).value;
  double err = zI.abs_error + zII.abs_error + zIII.spectral_error;

  std::map<GenericClass, RepLabel> first_label;
  cplx direct = 0;
  for (const auto& t : decompose(spec, chi, opt.cutoff)) {
    ++out.terms;
    const double m = to_double(t.multiplicity);
    const RepLabel lab = t.label.numeric();
    SuperZeta z;
    switch (t.label.kind) {
      case ExactLabel::Kind::Scalar:
        if (t.label.params[0] == 0 && t.label.params[1] == 0) continue;  // trivial representation: kernel only
        z = super_zeta(lab, s);
        break;
      case ExactLabel::Kind::Schrodinger: z = zeta_from_spectra(direct_cache.get(lab), s); break;
      case ExactLabel::Kind::Generic: {
        const auto& p = t.label.params;
        const GenericClass c{p[0] * p[0] + p[1] * p[1], p[2]};
        auto it = first_label.emplace(c, lab).first;
        z = zeta_from_spectra(direct_cache.get(it->second), s);
        break;
      }
    }
    direct += m * z.value;
    err += std::abs(m) * z.abs_error;
  }
  out.direct_side = direct;
  out.spectra = static_cast<int>(factor_cache.size() + direct_cache.size());

  // families beyond the cutoff appear only on the factor side
  const double R = opt.cutoff;
  if (trivial_on_derived(spec, chi)) {
    const double p = 2.0 * kKappa * s;
    const double base = std::max(R - 1.0, 1.0);
    err += std::abs(scalar_zeta_closed(1.0, 0.0, s).value) * 2.0 * M_PI * std::pow(base, 2.0 - p) / (p - 2.0) * 2.0;
  }
  if (trivial_on_center(spec, chi)) {
    const double p = kKappa * s - 1.0;
    const double r = static_cast<double>(spec.r);
    const double base = std::max(R - r, 1.0);
    const double z1 = std::abs(zeta_from_spectra(factor_cache.get(SchrodingerLabel{1.0}), s).value);
    err += z1 * 2.0 * (std::pow(base, 1.0 - p) / ((p - 1.0) * r) + std::pow(base, -p));
  }
  out.combined_error = err;
  out.difference = std::abs(out.factor_side - out.direct_side);
  out.relative = std::abs(out.direct_side) > 0 ? out.difference / std::abs(out.direct_side) : out.difference;
  out.pass = out.difference <= err + 1e-9 * std::abs(out.direct_side) && out.relative <= 0.05;
  return out;
}

}  // namespace nilzeta
