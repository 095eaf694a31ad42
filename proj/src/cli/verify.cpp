#include "nilzeta/cli.hpp"
#include "nilzeta/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace nilzeta::cli {

namespace {

CheckRow exact_row(std::string name, bool ok, std::string detail = "exact") {
  CheckRow r;
  r.name = std::move(name);
  r.pass = ok;
  r.detail = std::move(detail);
  return r;
}

CheckRow tol_row(std::string name, double measured, double tol) {
  CheckRow r;
  r.name = std::move(name);
  r.measured = measured;
  r.tolerance = tol;
  r.pass = std::isfinite(measured) && measured <= tol;
  return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Rational random_rational(std::mt19937_64& rng, int span = 9, int maxden = 6) {
  std::uniform_int_distribution<int> n(-span, span), d(1, maxden);
  return Rational(n(rng), d(rng));
}

GroupElement random_element(std::mt19937_64& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng),
          random_rational(rng)};
}

LatticeSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rr(1, 5);
  LatticeSpec s;
  s.r = rr(rng);
  s.u = random_rational(rng, 3, 2);
  s.v = random_rational(rng, 3, 2);
  s.e = random_rational(rng, 3, 3);
  s.f = random_rational(rng, 3, 3);
  s.g = random_rational(rng, 3, 3);
  s.h = random_rational(rng, 3, 3);
  return s;
}

LatticeSpec second_spec() { return {2, 1, 1, 0, 0, 0, 0}; }

// ---- group ----
std::vector<CheckRow> group_suite() {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(1);
  bool assoc = true, ident = true, inv = true;
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    assoc = assoc && multiply(multiply(x, y), z) == multiply(x, multiply(y, z));
    ident = ident && multiply(x, identity()) == x && multiply(identity(), x) == x;
    inv = inv && multiply(x, inverse(x)).is_identity() && multiply(inverse(x), x).is_identity();
  }
  rows.push_back(exact_row("associativity on 1000 random triples", assoc));
  rows.push_back(exact_row("identity on 1000 random elements", ident));
  rows.push_back(exact_row("inverse on 1000 random elements", inv));

  const GroupElement g1{1, 0, 0, 0, 0}, g2{0, 1, 0, 0, 0};
  bool powers = true;
  for (long long k = -5; k <= 5; ++k)
    for (long long l = -5; l <= 5; ++l) {
      const GroupElement want{rat(k), rat(l), rat(k * l, 2), rat(k * k * l, 12), rat(-k * l * l, 12)};
      powers = powers && multiply(power(g1, k), power(g2, l)) == want;
    }
  rows.push_back(exact_row("log(g1^k g2^l) for k,l in [-5,5]", powers));
  rows.push_back(exact_row("g1 g2 = (1,1,1/2,1/12,-1/12)",
                           multiply(g1, g2) == GroupElement{1, 1, rat(1, 2), rat(1, 12), rat(-1, 12)}));
  rows.push_back(exact_row("[g1,g2] = (0,0,1,1/2,1/2)", commutator(g1, g2) == GroupElement{0, 0, 1, rat(1, 2), rat(1, 2)}));
  rows.push_back(exact_row("dilate(2, (1,1,1,1,1)) = (2,2,4,8,8)",
                           dilate(GradedDilation(2), GroupElement{1, 1, 1, 1, 1}) == GroupElement{2, 2, 4, 8, 8}));
  bool hom = true;
  for (int i = 0; i < 200; ++i) {
    const GradedDilation d(Rational(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 4)));
    const auto x = random_element(rng), y = random_element(rng);
    hom = hom && dilate(d, multiply(x, y)) == multiply(dilate(d, x), dilate(d, y));
  }
  rows.push_back(exact_row("dilations are automorphisms (200 random pairs)", hom));
  return rows;
}

// ---- uea ----
std::vector<CheckRow> uea_suite() {
  std::vector<CheckRow> rows;
  bool dd = true;
  for (int q = 0; q < 4; ++q) dd = dd && compose(rumin_matrix(q + 1), rumin_matrix(q)).is_zero();
  rows.push_back(exact_row("D∘D=0", dd));
  bool orders = true;
  for (int q = 0; q < 5; ++q) orders = orders && rumin_matrix(q).weighted_degree() == Constants::kq[static_cast<std::size_t>(q)];
  rows.push_back(exact_row("Heisenberg orders k_q = 1,3,2,3,1", orders));
  bool adj = true;
  for (int q = 0; q < 5; ++q) adj = adj && formal_adjoint(formal_adjoint(rumin_matrix(q))) == rumin_matrix(q);
  rows.push_back(exact_row("formal adjoint is an involution on D_q", adj));

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> gen(1, 5), len(0, 6);
  bool confluent = true, antipode_inv = true;
  for (int i = 0; i < 200; ++i) {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& c : w) c = gen(rng);
    const UEAPoly p = normal_form(w);
    confluent = confluent && p == normal_form_randomized(w, QSqrt2(1), rng);
    antipode_inv = antipode_inv && antipode(antipode(p)) == p;
  }
  rows.push_back(exact_row("normal form independent of reduction order (200 words)", confluent));
  rows.push_back(exact_row("antipode is an involution (200 words)", antipode_inv));
  return rows;
}

// ---- lattice ----
std::vector<CheckRow> lattice_suite() {
  std::vector<CheckRow> rows;
  std::mt19937_64 rng(3);
  std::vector<LatticeSpec> specs{LatticeSpec::gamma0(), second_spec()};
  for (int i = 0; i < 20; ++i) specs.push_back(random_spec(rng));

  bool gens_in = true, closed = true, comm_in = true;
  for (const auto& s : specs) {
    const auto g = generators(s);
    for (const auto& x : g) gens_in = gens_in && contains(s, x);
    std::uniform_int_distribution<int> pick(0, 4), ex(-2, 2);
    for (int t = 0; t < 10; ++t) {
      GroupElement x = identity(), y = identity();
      for (int k = 0; k < 4; ++k) {
        x = multiply(x, power(g[static_cast<std::size_t>(pick(rng))], ex(rng)));
        y = multiply(y, power(g[static_cast<std::size_t>(pick(rng))], ex(rng)));
      }
      closed = closed && contains(s, multiply(x, inverse(y)));
      comm_in = comm_in && subgroup_contains(s, Subgroup::Commutator, commutator(x, y));
    }
  }
  rows.push_back(exact_row("generators lie in Gamma (22 specs)", gens_in));
  rows.push_back(exact_row("random words in the generators lie in Gamma", closed));
  rows.push_back(exact_row("commutators of lattice elements lie in [Gamma,Gamma]", comm_in));

  const auto s2 = second_spec();
  rows.push_back(exact_row("(0,0,1/2,1/4,1/4) in Gamma for r=2, u=v=1",
                           contains(s2, GroupElement{0, 0, rat(1, 2), rat(1, 4), rat(1, 4)})));
  rows.push_back(exact_row("(1/2,0,0,0,0) not in Gamma0", !contains(LatticeSpec::gamma0(), GroupElement{rat(1, 2), 0, 0, 0, 0})));

  const auto z2 = PlanarLattice::from_generators({{1, 0}, {0, 1}});
  const auto gp0 = gamma_double_prime(LatticeSpec::gamma0());
  rows.push_back(exact_row("Gamma0'' = Z^2 and its dual = Z^2", gp0.same_lattice(z2) && dual_lattice(gp0).same_lattice(z2)));
  bool dd = true, in_r = true;
  for (const auto& s : specs) {
    const auto L = gamma_double_prime(s);
    dd = dd && dual_lattice(dual_lattice(L)).same_lattice(L);
    const auto D = dual_lattice(L);
    const Rational r(s.r);
    const auto rz = PlanarLattice::from_generators({{r, 0}, {0, r}});
    for (const auto& b : D.basis) in_r = in_r && rz.contains(b);
  }
  rows.push_back(exact_row("dual(dual(L)) = L for 22 lattices", dd));
  rows.push_back(exact_row("(Gamma'')^* inside rZ x rZ for 22 specs", in_r));

  const auto g0 = LatticeSpec::gamma0();
  Character bad;
  bad.phi4 = rat(1, 2);
  Character free_ab;
  free_ab.a = rat(2, 7);
  free_ab.b = rat(-3, 5);
  rows.push_back(exact_row("trivial character is valid", character_validate(g0, Character::trivial())));
  rows.push_back(exact_row("Gamma0 characters with arbitrary a,b are valid", character_validate(g0, free_ab)));
  rows.push_back(exact_row("Gamma0 character with phi4 = 1/2 is rejected", !character_validate(g0, bad)));

  bool lm = true;
  int tested = 0;
  for (const auto& s : specs) {
    for (int t = 0; t < 4; ++t) {
      Character chi;
      chi.a = random_rational(rng, 3, 4);
      chi.b = random_rational(rng, 3, 4);
      if (t >= 2) {
        chi.c = random_rational(rng, 2, 2);
        chi.phi4 = random_rational(rng, 2, 2);
        chi.phi5 = random_rational(rng, 2, 2);
      }
      if (t == 0) chi = Character::trivial();
      if (!character_validate(s, chi)) continue;
      try {
        const auto [l0, m0] = solve_lambda_mu0(s, chi);
        const Rational L(l0), M(m0), r(s.r);
        lm = lm && is_integer(L / r) && is_integer(M / r);
        lm = lm && is_integer(L * (s.u - 1) / 2 + M * (s.v - 1) / 2 - chi.c);
        lm = lm && is_integer(L * s.e + M * s.f - chi.phi4) && is_integer(L * s.g + M * s.h - chi.phi5);
        ++tested;
      } catch (const NotFound&) {
        lm = false;
      }
    }
  }
  rows.push_back(exact_row("(lambda0, mu0) re-checked on " + std::to_string(tested) + " spec/character pairs", lm && tested > 0));
  return rows;
}

// ---- repdecomp ----
std::vector<CheckRow> repdecomp_suite() {
  std::vector<CheckRow> rows;
  bool sum = true, periodic = true;
  for (long long l = 1; l <= 50; ++l)
    for (long long r = 1; r <= 5; ++r)
      for (long long w = -10; w <= 10; ++w) {
        long long total = 0;
        for (long long n = 1; n <= 2 * l; ++n) {
          const long long m = mult_count(l, r, w, n);
          total += m;
          periodic = periodic && m == mult_count(l, r, w, n + 2 * l) && m == mult_count(l, r, w, n - 2 * l);
        }
        sum = sum && total == l;
      }
  rows.push_back(exact_row("sum rule sum_{n=1}^{2l} m(l,r,w,n) = l for l<=50, r<=5, |w|<=10", sum));
  rows.push_back(exact_row("m(l,r,w,n + 2l) = m(l,r,w,n)", periodic));
  rows.push_back(exact_row("m(2,1,0,3) = 1 and m(2,1,0,1) = 0", mult_count(2, 1, 0, 3) == 1 && mult_count(2, 1, 0, 1) == 0));

  const auto g0 = LatticeSpec::gamma0();
  const auto chi = Character::trivial();
  rows.push_back(exact_row("nu0(1,1) = 1/3 on Gamma0", nu0_of(g0, chi, 1, 1) == rat(1, 3)));

  const auto terms = decompose(g0, chi, 1.5);
  auto has = [&](ExactLabel::Kind k, std::vector<Rational> p) {
    return std::any_of(terms.begin(), terms.end(), [&](const DecompositionTerm& t) {
      if (t.label.kind != k) return false;
      if (k == ExactLabel::Kind::Generic) return t.label.params[0] == p[0] && t.label.params[1] == p[1];
      return t.label.params == p;
    });
  };
  bool listed = true;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      if (a || b) {
        listed = listed && has(ExactLabel::Kind::Scalar, {Rational(a), Rational(b)});
        listed = listed && has(ExactLabel::Kind::Generic, {Rational(a), Rational(b), 0});
      }
  listed = listed && has(ExactLabel::Kind::Schrodinger, {Rational(1)}) && has(ExactLabel::Kind::Schrodinger, {Rational(-1)});
  rows.push_back(exact_row("Gamma0 decomposition at cutoff 1.5 lists the expected families", listed));

  bool sorted = std::is_sorted(terms.begin(), terms.end(),
                               [](const DecompositionTerm& x, const DecompositionTerm& y) { return x.label < y.label; });
  rows.push_back(exact_row("decomposition output is sorted", sorted));
  rows.push_back(exact_row("Generic(1,1,1/3) on Gamma0 has multiplicity 1", generic_mult(g0, chi, 1, 1, rat(1, 3)) == 1));
  return rows;
}

// ---- spectral ----
std::vector<CheckRow> spectral_suite(const SpectralConfig& cfg) {
  std::vector<CheckRow> rows;
  bool consts = true;
  for (std::size_t q = 0; q < 5; ++q)
    consts = consts && Constants::aq[q] * Constants::kq[q] == Constants::kappa && Constants::Nq[q + 1] - Constants::Nq[q] == Constants::kq[q];
  rows.push_back(exact_row("a_q k_q = kappa and k_q = N_{q+1} - N_q", consts));

  bool scal = true;
  for (int q = 0; q <= 5; ++q)
    scal = scal && verify_scalar_spectrum(q, 1, 0) && verify_scalar_spectrum(q, rat(3, 2), rat(-2, 5));
  rows.push_back(exact_row("scalar Delta_q characteristic polynomials match the closed lists", scal));

  double zmax = 0;
  for (int i = 0; i < 20; ++i) {
    const cplx s(-1.9 + 0.2 * i, 0.1 * (i % 3));
    zmax = std::max(zmax, rel(scalar_zeta_from_spectra(1, 0, s).value, scalar_zeta_closed(1, 0, s).value));
  }
  rows.push_back(tol_row("scalar zeta from spectra vs closed form, 20 points", zmax, 1e-12));
  rows.push_back(tol_row("scalar zeta'(0) = -2 kappa log 2",
                         std::abs(scalar_zeta_from_spectra(1, 0, 0.0).derivative.real() + 2 * Constants::kappa * std::log(2.0)), 1e-12));

  const auto R = realize(SchrodingerLabel{1}, cfg.N, cfg.margin);
  const auto S = spectrum_banded(first_order_laplacian(R, 0), cfg.trust_fraction, cfg.sym_tol);
  double osc = 0;
  for (int n = 0; n < 10; ++n) osc = std::max(osc, rel(S.eigenvalues[static_cast<std::size_t>(n)], 2 * M_PI * (2 * n + 1)));
  rows.push_back(tol_row("Schrodinger(1) D0*D0 matches 2pi(2n+1), first 10", osc, 1e-8));
  double chain = 0;
  for (int q = 0; q < 4; ++q) chain = std::max(chain, chain_residual(R, q));
  rows.push_back(tol_row("chain residual for Schrodinger(1)", chain, 1e-8));
  double adj = 0;
  for (int q = 0; q < 5; ++q) adj = std::max(adj, adjoint_residual(R, q));
  rows.push_back(tol_row("formal adjoint matches matrix adjoint for Schrodinger(1)", adj, 1e-8));
  rows.push_back(tol_row("Casimir residual for Generic(1,0,5)", casimir_check(realize(GenericLabel{1, 0, 5}, cfg.N, cfg.margin)), 1e-8));

  const auto s1 = compute_spectra(SchrodingerLabel{1}, cfg);
  const auto z1 = zeta_from_spectra(s1, 2.0);
  rows.push_back(exact_row("Schrodinger(1) multiset subtraction leaves nothing unmatched", s1.unmatched == 0,
                           std::to_string(s1.unmatched) + " unmatched"));
  for (double h : {2.0, 3.0}) {
    const auto sh = compute_spectra(SchrodingerLabel{h}, cfg);
    const auto zh = zeta_from_spectra(sh, 2.0);
    const cplx scaled = std::pow(h, -2.0 * Constants::kappa) * z1.value;
    const double err = zh.abs_error + std::pow(h, -2.0 * Constants::kappa) * z1.abs_error;
    CheckRow r = tol_row("Schrodinger(" + std::to_string(static_cast<int>(h)) + ") zeta(2) = |hbar|^{-2 kappa} zeta_1(2)",
                         std::abs(zh.value - scaled), std::max(err, 1e-12 * std::abs(scaled)));
    rows.push_back(r);
  }

  const auto ga = compute_spectra(GenericLabel{3, 4, -2}, cfg);
  const auto gb = compute_spectra(GenericLabel{5, 0, -2}, cfg);
  double rot = 0;
  bool nonempty = false;
  for (std::size_t q = 0; q < 5; ++q) {
    const std::size_t n = std::min(ga.C[q].size(), gb.C[q].size());
    nonempty = nonempty || n > 0;
    for (std::size_t i = 0; i < n; ++i) rot = std::max(rot, rel(ga.C[q][i], gb.C[q][i]));
  }
  rows.push_back(tol_row("Generic(3,4,-2) vs Generic(5,0,-2) trusted spectra", nonempty ? rot : HUGE_VAL, 1e-6));
  return rows;
}

// ---- zeta ----
std::vector<CheckRow> zeta_suite() {
  std::vector<CheckRow> rows;
  double h = 0;
  for (double a : {0.25, 0.5, 0.75}) h = std::max(h, std::abs(hurwitz(-1.0, a).value - cplx(-bernoulli2(a) / 2)));
  rows.push_back(tol_row("hurwitz(-1,a) = -B2(a)/2 for a in {1/4,1/2,3/4}", h, 1e-10));
  rows.push_back(tol_row("riemann(2) = pi^2/6", std::abs(riemann(2.0).value - cplx(M_PI * M_PI / 6)), 1e-12));
  rows.push_back(tol_row("riemann'(0) = -log(2 pi)/2", std::abs(*riemann(0.0).derivative - cplx(-0.5 * std::log(2 * M_PI))), 1e-12));

  double e1 = 0;
  for (const auto& [a, want] : std::vector<std::pair<Rational, double>>{{0, -1}, {1, -1}, {rat(1, 3), 0}, {rat(-5, 4), 0}})
    e1 = std::max(e1, std::abs(epstein_1d(0.0, a).value - cplx(want)));
  rows.push_back(tol_row("epstein_1d(0,a) = -1 for a in Z, else 0", e1, 1e-8));
  double e2 = 0;
  for (const auto& [a, b, want] : std::vector<std::tuple<Rational, Rational, double>>{
           {0, 0, -1}, {2, -1, -1}, {rat(1, 2), 0, 0}, {rat(1, 3), rat(2, 5), 0}})
    e2 = std::max(e2, std::abs(epstein_2d(0.0, ShiftedLattice2::standard(a, b)).value - cplx(want)));
  rows.push_back(tol_row("epstein_2d(0,(a,b)) = -1 for integral shifts, else 0", e2, 1e-8));

  double res = 0;
  std::mt19937_64 rng(5);
  std::vector<LatticeSpec> specs{LatticeSpec::gamma0(), second_spec(), random_spec(rng)};
  for (const auto& s : specs) {
    const auto L = dual_shifted_lattice(s, Character::trivial());
    const double area = to_double(gamma_double_prime(s).covolume());
    const cplx got = numerical_residue([&](cplx z) { return epstein_2d(z, L, {16, false}).value; }, 2.0, 1e-2);
    res = std::max(res, rel(got, cplx(2 * M_PI * area)));
  }
  rows.push_back(tol_row("epstein_2d residue at s=2 equals 2pi Area(R^2/Gamma'') for 3 lattices", res, 1e-6));
  return rows;
}

// ---- torsion ----
std::vector<CheckRow> torsion_suite(const SpectralConfig& cfg) {
  std::vector<CheckRow> rows = consistency_checks(cfg);
  const auto g0 = LatticeSpec::gamma0();
  double zero = 0, prime = 0;
  for (const char* c : {"0,0,0,0,0", "1/3,0,0,0,0", "0,1/2,0,0,0", "1/4,3/4,0,0,0"}) {
    const auto chi = Character::parse(c);
    const auto z = zeta_I(g0, chi, 0.0);
    zero = std::max(zero, std::abs(z.value));
    const double want = is_trivial(g0, chi) ? 2 * Constants::kappa * std::log(2.0) : 0.0;
    prime = std::max(prime, std::abs(z.derivative->real() - want));
  }
  rows.push_back(tol_row("zeta_I(0) = 0 for four characters on Gamma0", zero, 1e-8));
  rows.push_back(tol_row("zeta_I'(0) = 2 kappa log 2 (trivial) and 0 (nontrivial)", prime, 1e-8));

  bool trivial_tau = true;
  int cases = 0;
  for (const auto& s : {g0, second_spec()})
    for (const char* c : {"1/3,0,0,0,0", "0,1/2,0,0,0", "1/4,3/4,0,0,0"}) {
      const auto chi = Character::parse(c);
      if (!character_validate(s, chi)) continue;
      const auto rep = torsion_report(s, chi);
      trivial_tau = trivial_tau && rep.tau == 1.0 && rep.acyclic;
      for (const auto* k : {&rep.zetaI_prime0, &rep.zetaII_prime0, &rep.zetaIII_prime0})
        trivial_tau = trivial_tau && k->provenance != Provenance::Numeric;
      ++cases;
    }
  rows.push_back(exact_row("tau = 1 and acyclic for " + std::to_string(cases) + " nontrivial characters", trivial_tau && cases >= 3));

  SpectralCache cache(cfg);
  const auto z2 = zeta_II(g0, Character::trivial(), 2.0, cache);
  const auto& s1 = cache.get(SchrodingerLabel{1});
  // zeta_II(s) = r^{1-kappa s} Z_1d(kappa s - 1; 0) zeta_1(s) with r = 1
  const cplx want = epstein_1d(cplx(2.0 * Constants::kappa - 1), Rational(0)).value * zeta_from_spectra(s1, 2.0).value;
  rows.push_back(tol_row("zeta_II(2) equals its factorization on Gamma0", std::abs(z2.value - want),
                         2 * z2.abs_error + 1e-12 * std::abs(want)));
  return rows;
}

}  // namespace

std::vector<std::string> suite_names() { return {"group", "uea", "lattice", "repdecomp", "spectral", "zeta", "torsion", "all"}; }

std::vector<CheckRow> run_suite(const std::string& name, const SpectralConfig& cfg) {
  if (name == "group") return group_suite();
  if (name == "uea") return uea_suite();
  if (name == "lattice") return lattice_suite();
  if (name == "repdecomp") return repdecomp_suite();
  if (name == "spectral") return spectral_suite(cfg);
  if (name == "zeta") return zeta_suite();
  if (name == "torsion") return torsion_suite(cfg);
  if (name == "all") {
    std::vector<CheckRow> all;
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      for (auto& r : run_suite(n, cfg)) {
        r.name = n + ": " + r.name;
        all.push_back(std::move(r));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace nilzeta::cli
