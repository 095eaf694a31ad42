#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "../oracles/decomposition_oracle.hpp"
#include "nilzeta/repdecomp.hpp"

using namespace nilzeta;

namespace {

std::map<oracle::Key, Rational> as_map(const std::vector<DecompositionTerm>& terms) {
  std::map<oracle::Key, Rational> out;
  for (const auto& t : terms) out[{static_cast<int>(t.label.kind), t.label.params}] += t.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("mult_count") {
  for (long long n = -4; n <= 4; ++n) CHECK(mult_count(1, 1, 0, n) == (n % 2 == 0 ? 1 : 0));
  CHECK(mult_count(2, 1, 0, 3) == 1);
  CHECK(mult_count(2, 1, 0, 1) == 0);
  for (long long l = 1; l <= 12; ++l)
    for (long long w = -3; w <= 3; ++w) {
      long long total = 0;
      for (long long n = 1; n <= 2 * l; ++n) total += mult_count(l, 3, w, n);
      CHECK(total == l);
    }
}

TEST_CASE("nu0 and w") {
  const auto s = LatticeSpec::gamma0();
  CHECK(w_of(s, Character::trivial(), 1, 1) == 0);
  CHECK(nu0_of(s, Character::trivial(), 1, 1) == rat(1, 3));
  CHECK(w_of(s, Character::parse("0,0,2,0,0"), 3, -5) == 2);
  CHECK_THROWS(nu0_of(s, Character::trivial(), 0, 0));
}

TEST_CASE("scalar and Schrodinger multiplicities") {
  const auto s = LatticeSpec::gamma0();
  CHECK(scalar_mult(s, Character::trivial(), 0, 0) == 1);
  CHECK(scalar_mult(s, Character::trivial(), rat(1, 2), 0) == 0);
  CHECK(schrodinger_mult(s, Character::trivial(), 3) == 3);
  CHECK(schrodinger_mult(s, Character::parse("0,0,1/2,0,0"), rat(1, 2)) == 0);
}

TEST_CASE("generic multiplicities") {
  const auto s = LatticeSpec::gamma0();
  const auto chi = Character::trivial();
  CHECK(generic_mult(s, chi, 1, 1, rat(1, 3)) == 1);
  CHECK(generic_mult(s, chi, 0, 0, 0) == 0);
  // one period of nu carries d/r in total, and the pattern repeats with period 2d
  for (const auto& [lam, mu] : std::vector<std::pair<int, int>>{{2, 4}, {3, 0}, {6, -3}}) {
    const Rational nu0 = nu0_of(s, chi, lam, mu);
    const long long d = std::gcd(std::abs(lam), std::abs(mu));
    long long total = 0;
    for (long long j = 0; j < 2 * d; ++j) {
      const long long m = generic_mult(s, chi, lam, mu, nu0 + j);
      total += m;
      CHECK(m == generic_mult(s, chi, lam, mu, nu0 + j + 2 * d));
    }
    CHECK(total == d);
  }
  CHECK(generic_mult(s, chi, 1, 1, to_double(rat(1, 3)) + 1e-14) == 1);
}

TEST_CASE("decompose agrees with the brute-force oracle") {
  for (const char* c : {"0,0,0,0,0", "1/3,1/4,0,0,0", "0,0,1/2,0,0"}) {
    const auto chi = Character::parse(c);
    const auto s = LatticeSpec::gamma0();
    if (!character_validate(s, chi)) continue;
    CHECK(as_map(decompose(s, chi, 2.5)) == oracle::decompose(s, chi, 2.5));
  }
  const LatticeSpec t{2, 1, 1, 0, 0, 0, 0};
  CHECK(as_map(decompose(t, Character::trivial(), 3.0)) == oracle::decompose(t, Character::trivial(), 3.0));
}

TEST_CASE("decompose is stable under cutoff growth") {
  const auto s = LatticeSpec::gamma0();
  const auto small = as_map(decompose(s, Character::trivial(), 1.5));
  const auto big = as_map(decompose(s, Character::trivial(), 2.5));
  for (const auto& [k, m] : small) CHECK(big.at(k) == m);
}

TEST_CASE("characters without kernel on the derived group drop scalars") {
  const auto s = LatticeSpec{1, 3, 1, 0, 0, 0, 0};
  const auto chi = Character::parse("0,0,1/2,0,0");
  if (character_validate(s, chi))
    for (const auto& t : decompose(s, chi, 2.0)) CHECK(t.label.kind != ExactLabel::Kind::Scalar);
  const auto nontrivial = decompose(LatticeSpec::gamma0(), Character::parse("1/3,0,0,0,0"), 2.0);
  for (const auto& t : nontrivial) CHECK_FALSE((t.label.kind == ExactLabel::Kind::Scalar && t.label.params[0] == 0 && t.label.params[1] == 0));
}
