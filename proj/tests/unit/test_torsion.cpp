#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/torsion.hpp"

using namespace nilzeta;

namespace {

const LatticeSpec kG0 = LatticeSpec::gamma0();
const LatticeSpec kR2{2, 1, 1, 0, 0, 0, 0};

}  // namespace

TEST_CASE("zeta_I endpoint values") {
  for (const char* c : {"0,0,0,0,0", "1/3,0,0,0,0", "0,1/2,0,0,0", "1/4,3/4,0,0,0"}) {
    const auto chi = Character::parse(c);
    const auto z = zeta_I(kG0, chi, 0.0);
    CHECK(std::abs(z.value) < 1e-10);
    CHECK(z.derivative->real() == doctest::Approx(is_trivial(kG0, chi) ? 12 * std::log(2.0) : 0.0).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("zeta_I factorization at a regular point") {
  const auto chi = Character::parse("1/3,0,0,0,0");
  const double s = 0.9;
  const auto z = zeta_I(kG0, chi, s);
  const auto E = epstein_2d(2 * 6 * s, ShiftedLattice2::standard(rat(1, 3), 0));
  CHECK(z.value.real() == doctest::Approx(E.value.real() * scalar_zeta_closed(1, 0, s).value.real()).epsilon(1e-10));
  CHECK_THROWS_AS(zeta_I(kG0, chi, 1.0 / 6), AtPole);
}

TEST_CASE("zeta_II vanishes when the character is nontrivial on the center") {
  SpectralCache cache;
  const LatticeSpec s{1, 1, 1, rat(1, 2), 0, 0, 0};
  Character c2;
  c2.phi4 = rat(1, 2);
  if (character_validate(s, c2)) {
    const auto z = zeta_II(s, c2, 2.0, cache);
    CHECK(z.value == cplx(0));
    CHECK(cache.size() == 0);
  }
}

TEST_CASE("spectral cache reuses labels") {
  SpectralCache cache(SpectralConfig{96});
  const auto& a = cache.get(SchrodingerLabel{1});
  const auto& b = cache.get(SchrodingerLabel{1});
  CHECK(&a == &b);
  CHECK(cache.size() == 1);
}

TEST_CASE("torsion report") {
  const auto triv = torsion_report(kG0, Character::trivial());
  CHECK_FALSE(triv.acyclic);
  CHECK(triv.zetaI_prime0.value == doctest::Approx(12 * std::log(2.0)));
  for (const auto& spec : {kG0, kR2})
    for (const char* c : {"1/3,0,0,0,0", "0,1/2,0,0,0", "1/4,3/4,0,0,0"}) {
      const auto chi = Character::parse(c);
      if (!character_validate(spec, chi)) continue;
      const auto r = torsion_report(spec, chi);
      CHECK(r.tau == 1.0);
      CHECK(r.acyclic);
      CHECK(r.zetaI_prime0.provenance == Provenance::Exact);
      CHECK(r.zetaIII_prime0.provenance != Provenance::Numeric);
      CHECK_FALSE(r.poles.empty());
    }
  CHECK_THROWS(torsion_report(kG0, Character::parse("0,0,0,1/2,0")));
}

TEST_CASE("consistency checks") {
  for (const auto& row : consistency_checks())
    if (row.asserted) CHECK_MESSAGE(row.pass, row.name);
}

TEST_CASE("zeta_III direct sum and shell control") {
  SpectralCache cache(SpectralConfig{128});
  TorsionOptions opt;
  opt.spectral.N = 128;
  opt.cutoff = 1.5;
  opt.cutoff_tol = HUGE_VAL;
  const auto r = zeta_III_structural(kG0, Character::trivial(), 11.0 / 6, cache, opt);
  REQUIRE(r.direct.has_value());
  CHECK(r.terms > 0);
  CHECK(r.distinct_spectra <= r.terms);
  CHECK(std::isfinite(r.spectral_error));
  opt.cutoff_tol = 1e-12;
  CHECK_THROWS_AS(zeta_III_structural(kG0, Character::trivial(), 11.0 / 6, cache, opt), CutoffInsufficient);
  const auto low = zeta_III_structural(kG0, Character::trivial(), 0.5, cache, TorsionOptions{});
  CHECK_FALSE(low.direct.has_value());
}

TEST_CASE("dual shifted lattice of Gamma0") {
  const auto L = dual_shifted_lattice(kG0, Character::parse("1/3,0,0,0,0"));
  CHECK(L.gram[0][0] * L.gram[1][1] - L.gram[0][1] * L.gram[1][0] == 1);
  CHECK(to_string(Provenance::PaperTrusted) == "paper-trusted");
}
