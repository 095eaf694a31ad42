#pragma once

#include "nilzeta/group.hpp"
#include "nilzeta/intlinalg.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilzeta {

struct LatticeSpec {
  long long r = 1;
  Rational u{0}, v{0}, e{0}, f{0}, g{0}, h{0};

  static LatticeSpec gamma0() { return {1, 1, 1, 0, 0, 0, 0}; }
  void validate() const;
};

using RatVec = std::vector<Rational>;
using Vec2 = std::array<Rational, 2>;

// Finitely generated subgroup of Q^dim.
struct RationalLattice {
  int dim = 0;
  std::vector<RatVec> generators;
  std::vector<RatVec> basis;           // echelon basis, `rank` rows
  IntMatrix basis_from_generators;     // basis[i] = sum_k basis_from_generators[i][k] * generators[k]
  IntMatrix relations;                 // integer relations among generators (left kernel)

  static RationalLattice from_generators(int dim, std::vector<RatVec> gens);
  int rank() const { return static_cast<int>(basis.size()); }
  // Integer coordinates w.r.t. `basis`, if p lies in the lattice.
  std::optional<std::vector<BigInt>> coordinates(const RatVec& p) const;
  bool contains(const RatVec& p) const { return coordinates(p).has_value(); }
};

struct PlanarLattice {
  std::vector<Vec2> generators;
  std::array<Vec2, 2> basis;  // Lagrange-reduced

  static PlanarLattice from_generators(std::vector<Vec2> gens);
  bool contains(const Vec2& p) const;
  std::optional<std::array<BigInt, 2>> coordinates(const Vec2& p) const;  // w.r.t. basis
  std::array<Rational, 2> real_coordinates(const Vec2& p) const;
  Rational covolume() const;
  bool same_lattice(const PlanarLattice& o) const;
  PlanarLattice dual() const;
};

class DegenerateLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::array<Vec2, 2> lagrange_reduce(Vec2 b1, Vec2 b2);

std::array<GroupElement, 5> generators(const LatticeSpec& spec);
bool contains(const LatticeSpec& spec, const GroupElement& x);

enum class Subgroup { GammaCapDerived, GammaCapCenter, Commutator, CommutatorCapCenter };
bool subgroup_contains(const LatticeSpec& spec, Subgroup which, const GroupElement& x);

PlanarLattice gamma_double_prime(const LatticeSpec& spec);
PlanarLattice dual_lattice(const PlanarLattice& L);

// Unitary character: chi(g1)=e(a), chi(g2)=e(b), chi(g3)=e(c/r), chi(g4)=e(phi4), chi(g5)=e(phi5).
struct Character {
  Rational a{0}, b{0}, c{0}, phi4{0}, phi5{0};

  static Character trivial() { return {}; }
  static Character parse(const std::string& csv);  // "a,b,c,phi4,phi5"
  std::string str() const;
};

// (Gamma cap [G,G]) / [Gamma,Gamma] and the abelianization Z^2 + torsion.
struct Abelianization {
  std::vector<BigInt> torsion_invariants;  // Smith invariant factors > 1
  std::vector<BigInt> all_invariants;      // including 1s
  bool quotient_finite = false;
};
Abelianization abelianization(const LatticeSpec& spec);

bool character_validate(const LatticeSpec& spec, const Character& chi);
bool trivial_on_derived(const LatticeSpec& spec, const Character& chi);  // chi | Gamma cap [G,G] = 1
bool trivial_on_center(const LatticeSpec& spec, const Character& chi);   // chi | Gamma cap Z = 1
bool is_trivial(const LatticeSpec& spec, const Character& chi);

// Exponents of gamma_1..gamma_5 and of the three commutators, after greedy elimination.
struct WordDecomposition {
  BigInt k1, k2;                          // gamma_1^k1 gamma_2^k2 * y
  std::vector<BigInt> derived_exponents;  // y in terms of derived_generators()
};
// Generators of Gamma cap [G,G] in (x3,x4,x5): g3, g4, g5, [g1,g3], [g2,g3], [g1,g2].
std::vector<RatVec> derived_generators(const LatticeSpec& spec);
WordDecomposition decompose_word(const LatticeSpec& spec, const GroupElement& x);
// Phase of chi(x) in [0,1); requires x in Gamma and a valid chi.
Rational character_phase(const LatticeSpec& spec, const Character& chi, const GroupElement& x);

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<BigInt, BigInt> solve_lambda_mu0(const LatticeSpec& spec, const Character& chi);

}  // namespace nilzeta
