#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/lattice.hpp"

#include <random>

using namespace nilzeta;

namespace {

Rational rnd(std::mt19937_64& g, int span, int den) {
  std::uniform_int_distribution<int> n(-span, span), d(1, den);
  return Rational(n(g), d(g));
}

}  // namespace

TEST_CASE("generators") {
  const LatticeSpec s = LatticeSpec::gamma0();
  const auto g = generators(s);
  CHECK(g[0] == GroupElement{1, 0, 0, 0, 0});
  CHECK(g[2] == GroupElement{0, 0, 1, rat(1, 2), rat(1, 2)});
  const LatticeSpec t{1, 1, 1, 2, 3, 0, 0};
  CHECK(generators(t)[3] == GroupElement{0, 0, 0, 2, 3});
  for (const auto& x : g) CHECK(contains(s, x));
}

TEST_CASE("membership") {
  const LatticeSpec s{2, 1, 1, 0, 0, 0, 0};
  CHECK(contains(s, {0, 0, rat(1, 2), rat(1, 4), rat(1, 4)}));
  CHECK_FALSE(contains(LatticeSpec::gamma0(), {rat(1, 2), 0, 0, 0, 0}));
  CHECK(subgroup_contains(s, Subgroup::CommutatorCapCenter, {0, 0, 0, rat(1, 2), 0}));
  CHECK(subgroup_contains(s, Subgroup::GammaCapDerived, {0, 0, rat(1, 2), rat(1, 4), rat(1, 4)}));
  CHECK_THROWS(LatticeSpec{0, 1, 1, 0, 0, 0, 0}.validate());
}

TEST_CASE("closure under products on random specs") {
  std::mt19937_64 g(31);
  for (int i = 0; i < 10; ++i) {
    LatticeSpec s{1 + static_cast<long long>(g() % 4), rnd(g, 3, 2), rnd(g, 3, 2), rnd(g, 2, 3), rnd(g, 2, 3), rnd(g, 2, 3), rnd(g, 2, 3)};
    const auto gens = generators(s);
    GroupElement x = identity();
    for (int k = 0; k < 12; ++k) {
      x = multiply(x, power(gens[g() % 5], static_cast<long long>(g() % 5) - 2));
      REQUIRE(contains(s, x));
    }
    const auto wd = decompose_word(s, x);
    CHECK(wd.derived_exponents.size() == derived_generators(s).size());
  }
}

TEST_CASE("planar lattices") {
  const auto L = PlanarLattice::from_generators({{rat(1, 2), 0}, {0, rat(1, 3)}, {rat(1, 4), rat(1, 6)}});
  CHECK(L.covolume() == rat(1, 12));
  CHECK(L.contains({rat(1, 4), rat(1, 6)}));
  CHECK(dual_lattice(dual_lattice(L)).same_lattice(L));
  CHECK(L.covolume() * dual_lattice(L).covolume() == 1);
  CHECK_THROWS_AS(PlanarLattice::from_generators({{1, 1}, {2, 2}}), DegenerateLattice);
  const auto red = lagrange_reduce({1, 0}, {5, 1});
  CHECK(red[0][0] * red[0][0] + red[0][1] * red[0][1] == 1);
  CHECK(red[1][0] * red[1][0] + red[1][1] * red[1][1] == 1);
}

TEST_CASE("characters") {
  const auto s = LatticeSpec::gamma0();
  CHECK(character_validate(s, Character::trivial()));
  CHECK(character_validate(s, Character::parse("1/3,2/7,0,0,0")));
  CHECK_FALSE(character_validate(s, Character::parse("0,0,0,1/2,0")));
  CHECK(is_trivial(s, Character::trivial()));
  CHECK_FALSE(is_trivial(s, Character::parse("1/3,0,0,0,0")));
  CHECK(trivial_on_center(s, Character::parse("1/3,0,0,0,0")));
  CHECK(character_phase(s, Character::parse("1/3,0,0,0,0"), {2, 0, 0, 0, 0}) == rat(2, 3));
}

TEST_CASE("abelianization of Gamma0") {
  const auto ab = abelianization(LatticeSpec::gamma0());
  CHECK(ab.quotient_finite);
  CHECK(ab.torsion_invariants.empty());
}

TEST_CASE("lambda0, mu0") {
  const auto s = LatticeSpec::gamma0();
  const auto [l, m] = solve_lambda_mu0(s, Character::parse("1/5,1/7,0,0,0"));
  CHECK(l == 0);
  CHECK(m == 0);
  CHECK_THROWS_AS(solve_lambda_mu0(s, Character::parse("0,0,0,1/2,0")), NotFound);
}
