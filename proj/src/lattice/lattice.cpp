#include "nilzeta/lattice.hpp"

#include <sstream>

namespace nilzeta {

namespace {

Rational round_half_up(const Rational& x) { return Rational(floor(x + Rational(1, 2))); }

Rational dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

BigInt common_denominator(const std::vector<RatVec>& rows) {
  BigInt d = 1;
  for (const auto& r : rows)
    for (const auto& x : r) d = lcm(d, den(x));
  return d;
}

struct IntegerForm {
  IntMatrix H;  // echelon rows (rank rows)
  BigInt D;
};

// Cached integer echelon data is recomputed on demand; lattices here are tiny.
IntegerForm integer_form(const RationalLattice& L) {
  IntegerForm f;
  f.D = common_denominator(L.basis);
  for (const auto& b : L.basis) {
    std::vector<BigInt> row;
    for (const auto& x : b) row.push_back(num(x * Rational(f.D)));
    f.H.push_back(row);
  }
  return f;
}

}  // namespace

void LatticeSpec::validate() const {
  if (r < 1) throw std::invalid_argument("lattice spec: r must be >= 1");
}

RationalLattice RationalLattice::from_generators(int dim, std::vector<RatVec> gens) {
  RationalLattice L;
  L.dim = dim;
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("generator dimension mismatch");
  L.generators = std::move(gens);
  const BigInt D = common_denominator(L.generators);
  IntMatrix A;
  for (const auto& g : L.generators) {
    std::vector<BigInt> row;
    for (const auto& x : g) row.push_back(num(x * Rational(D)));
    A.push_back(row);
  }
  RowHNF h = row_hnf(A);
  for (int i = 0; i < h.rank; ++i) {
    RatVec b;
    for (const auto& x : h.H[static_cast<std::size_t>(i)]) b.push_back(Rational(x) / Rational(D));
    L.basis.push_back(b);
    L.basis_from_generators.push_back(h.U[static_cast<std::size_t>(i)]);
  }
  for (std::size_t i = static_cast<std::size_t>(h.rank); i < h.U.size(); ++i) L.relations.push_back(h.U[i]);
  return L;
}

std::optional<std::vector<BigInt>> RationalLattice::coordinates(const RatVec& p) const {
  if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  IntegerForm f = integer_form(*this);
  std::vector<BigInt> q;
  for (const auto& x : p) {
    Rational y = x * Rational(f.D);
    if (!is_integer(y)) return std::nullopt;
    q.push_back(num(y));
  }
  std::vector<BigInt> coef;
  for (const auto& row : f.H) {
    std::size_t piv = 0;
    while (row[piv] == 0) ++piv;
    if (q[piv] % row[piv] != 0) return std::nullopt;
    BigInt c = q[piv] / row[piv];
    for (std::size_t k = 0; k < q.size(); ++k) q[k] -= c * row[k];
    coef.push_back(c);
  }
  for (const auto& x : q)
    if (x != 0) return std::nullopt;
  return coef;
}

std::array<Vec2, 2> lagrange_reduce(Vec2 b1, Vec2 b2) {
  for (;;) {
    if (dot(b1, b1) > dot(b2, b2)) std::swap(b1, b2);
    Rational mu = round_half_up(dot(b1, b2) / dot(b1, b1));
    if (mu == 0) break;
    b2 = {b2[0] - mu * b1[0], b2[1] - mu * b1[1]};
  }
  return {b1, b2};
}

PlanarLattice PlanarLattice::from_generators(std::vector<Vec2> gens) {
  std::vector<RatVec> rows;
  for (const auto& g : gens) rows.push_back({g[0], g[1]});
  RationalLattice L = RationalLattice::from_generators(2, rows);
  if (L.rank() < 2) throw DegenerateLattice("planar lattice has rank < 2");
  PlanarLattice P;
  P.generators = std::move(gens);
  P.basis = lagrange_reduce({L.basis[0][0], L.basis[0][1]}, {L.basis[1][0], L.basis[1][1]});
  return P;
}

std::array<Rational, 2> PlanarLattice::real_coordinates(const Vec2& p) const {
  const auto& b1 = basis[0];
  const auto& b2 = basis[1];
  const Rational det = b1[0] * b2[1] - b1[1] * b2[0];
  return {(p[0] * b2[1] - p[1] * b2[0]) / det, (b1[0] * p[1] - b1[1] * p[0]) / det};
}

std::optional<std::array<BigInt, 2>> PlanarLattice::coordinates(const Vec2& p) const {
  auto c = real_coordinates(p);
  if (!is_integer(c[0]) || !is_integer(c[1])) return std::nullopt;
  return std::array<BigInt, 2>{num(c[0]), num(c[1])};
}

bool PlanarLattice::contains(const Vec2& p) const { return coordinates(p).has_value(); }

Rational PlanarLattice::covolume() const {
  Rational d = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
  return d < 0 ? Rational(-d) : d;
}

bool PlanarLattice::same_lattice(const PlanarLattice& o) const {
  for (const auto& b : basis)
    if (!o.contains(b)) return false;
  for (const auto& b : o.basis)
    if (!contains(b)) return false;
  return true;
}

PlanarLattice PlanarLattice::dual() const {
  const auto& b1 = basis[0];
  const auto& b2 = basis[1];
  const Rational det = b1[0] * b2[1] - b1[1] * b2[0];
  Vec2 d1{b2[1] / det, -b2[0] / det};
  Vec2 d2{-b1[1] / det, b1[0] / det};
  return from_generators({d1, d2});
}

PlanarLattice dual_lattice(const PlanarLattice& L) { return L.dual(); }

std::array<GroupElement, 5> generators(const LatticeSpec& s) {
  const Rational r(s.r);
  return {GroupElement{1, 0, 0, 0, 0}, GroupElement{0, 1, 0, 0, 0},
          GroupElement{0, 0, 1 / r, s.u / (2 * r), s.v / (2 * r)}, GroupElement{0, 0, 0, s.e, s.f},
          GroupElement{0, 0, 0, s.g, s.h}};
}

namespace {

std::vector<Vec2> gdp_generators(const LatticeSpec& s) {
  const Rational r(s.r);
  return {{1 / r, 0}, {0, 1 / r}, {(s.u - 1) / 2, (s.v - 1) / 2}, {s.e, s.f}, {s.g, s.h}};
}

bool in_inv_r_z(const Rational& x, long long r) { return is_integer(x * Rational(r)); }

}  // namespace

PlanarLattice gamma_double_prime(const LatticeSpec& spec) {
  spec.validate();
  return PlanarLattice::from_generators(gdp_generators(spec));
}

bool contains(const LatticeSpec& s, const GroupElement& x) {
  if (!is_integer(x[0]) || !is_integer(x[1])) return false;
  const Rational t = x[2] - x[0] * x[1] / 2;
  if (!in_inv_r_z(t, s.r)) return false;
  Vec2 p{x[3] - x[0] * x[0] * x[1] / 12 - (x[0] + s.u) / 2 * t,
         x[4] + x[0] * x[1] * x[1] / 12 + (x[1] - s.v) / 2 * t};
  return gamma_double_prime(s).contains(p);
}

bool subgroup_contains(const LatticeSpec& s, Subgroup which, const GroupElement& x) {
  switch (which) {
    case Subgroup::GammaCapDerived:
      if (x[0] != 0 || x[1] != 0 || !in_inv_r_z(x[2], s.r)) return false;
      return gamma_double_prime(s).contains({x[3] - s.u * x[2] / 2, x[4] - s.v * x[2] / 2});
    case Subgroup::GammaCapCenter:
      if (x[0] != 0 || x[1] != 0 || x[2] != 0) return false;
      return gamma_double_prime(s).contains({x[3], x[4]});
    case Subgroup::Commutator:
      return x[0] == 0 && x[1] == 0 && is_integer(x[2]) && in_inv_r_z(x[3] - x[2] / 2, s.r) &&
             in_inv_r_z(x[4] - x[2] / 2, s.r);
    case Subgroup::CommutatorCapCenter:
      return x[0] == 0 && x[1] == 0 && x[2] == 0 && in_inv_r_z(x[3], s.r) && in_inv_r_z(x[4], s.r);
  }
  return false;
}

Character Character::parse(const std::string& csv) {
  std::vector<Rational> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (parts.size() != 5) throw std::invalid_argument("character needs a,b,c,phi4,phi5: " + csv);
  return {parts[0], parts[1], parts[2], frac(parts[3]), frac(parts[4])};
}

std::string Character::str() const {
  return to_string(a) + "," + to_string(b) + "," + to_string(c) + "," + to_string(phi4) + "," + to_string(phi5);
}

std::vector<RatVec> derived_generators(const LatticeSpec& s) {
  const Rational r(s.r);
  return {{1 / r, s.u / (2 * r), s.v / (2 * r)},
          {0, s.e, s.f},
          {0, s.g, s.h},
          {0, 1 / r, 0},
          {0, 0, 1 / r},
          {1, Rational(1, 2), Rational(1, 2)}};
}

namespace {

std::vector<Rational> derived_phases(const LatticeSpec& s, const Character& chi) {
  return {chi.c / Rational(s.r), chi.phi4, chi.phi5, 0, 0, 0};
}

RationalLattice derived_lattice(const LatticeSpec& s) {
  return RationalLattice::from_generators(3, derived_generators(s));
}

}  // namespace

Abelianization abelianization(const LatticeSpec& spec) {
  spec.validate();
  RationalLattice L3 = derived_lattice(spec);
  const Rational r(spec.r);
  const std::vector<RatVec> comm{{1, Rational(1, 2), Rational(1, 2)}, {0, 1 / r, 0}, {0, 0, 1 / r}};
  IntMatrix S;
  for (const auto& c : comm) {
    auto co = L3.coordinates(c);
    if (!co) throw std::logic_error("commutator subgroup not inside Gamma cap [G,G]");
    S.push_back(*co);
  }
  Abelianization out;
  out.all_invariants = smith_invariants(S);
  out.quotient_finite = static_cast<int>(out.all_invariants.size()) == L3.rank();
  for (const auto& d : out.all_invariants)
    if (d > 1) out.torsion_invariants.push_back(d);
  return out;
}

bool character_validate(const LatticeSpec& spec, const Character& chi) {
  spec.validate();
  RationalLattice L3 = derived_lattice(spec);
  const auto ph = derived_phases(spec, chi);
  for (const auto& rel : L3.relations) {
    Rational t = 0;
    for (std::size_t i = 0; i < rel.size(); ++i) t += Rational(rel[i]) * ph[i];
    if (!is_integer(t)) return false;
  }
  return true;
}

bool trivial_on_derived(const LatticeSpec& spec, const Character& chi) {
  return is_integer(chi.c / Rational(spec.r)) && is_integer(chi.phi4) && is_integer(chi.phi5);
}

bool trivial_on_center(const LatticeSpec& spec, const Character& chi) {
  return is_integer(chi.c) && is_integer(chi.phi4) && is_integer(chi.phi5);
}

bool is_trivial(const LatticeSpec& spec, const Character& chi) {
  return trivial_on_derived(spec, chi) && is_integer(chi.a) && is_integer(chi.b);
}

WordDecomposition decompose_word(const LatticeSpec& spec, const GroupElement& x) {
  if (!contains(spec, x)) throw std::invalid_argument("decompose_word: element not in lattice");
  const auto gens = generators(spec);
  WordDecomposition w;
  w.k1 = num(x[0]);
  w.k2 = num(x[1]);
  const GroupElement head =
      multiply(power(gens[0], w.k1.convert_to<long long>()), power(gens[1], w.k2.convert_to<long long>()));
  const GroupElement y = multiply(inverse(head), x);
  RationalLattice L3 = derived_lattice(spec);
  auto coord = L3.coordinates({y[2], y[3], y[4]});
  if (!coord) throw std::logic_error("decompose_word: derived part not in Gamma cap [G,G]");
  w.derived_exponents.assign(L3.generators.size(), 0);
  for (std::size_t i = 0; i < coord->size(); ++i)
    for (std::size_t k = 0; k < L3.generators.size(); ++k)
      w.derived_exponents[k] += (*coord)[i] * L3.basis_from_generators[i][k];
  return w;
}

Rational character_phase(const LatticeSpec& spec, const Character& chi, const GroupElement& x) {
  WordDecomposition w = decompose_word(spec, x);
  const auto ph = derived_phases(spec, chi);
  Rational t = chi.a * Rational(w.k1) + chi.b * Rational(w.k2);
  for (std::size_t k = 0; k < ph.size(); ++k) t += Rational(w.derived_exponents[k]) * ph[k];
  return frac(t);
}

std::pair<BigInt, BigInt> solve_lambda_mu0(const LatticeSpec& spec, const Character& chi) {
  if (!character_validate(spec, chi)) throw NotFound("solve_lambda_mu0: character does not validate");
  const auto gens = gdp_generators(spec);
  const std::vector<Rational> phases{0, 0, chi.c, chi.phi4, chi.phi5};
  std::vector<RatVec> rows;
  for (const auto& g : gens) rows.push_back({g[0], g[1]});
  RationalLattice L = RationalLattice::from_generators(2, rows);
  if (L.rank() < 2) throw DegenerateLattice("Gamma'' has rank < 2");
  // Basis phases, then solve <l, b_i> = t_i.
  std::array<Rational, 2> t{0, 0};
  for (int i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) t[i] += Rational(L.basis_from_generators[i][k]) * phases[k];
  const auto& b1 = L.basis[0];
  const auto& b2 = L.basis[1];
  const Rational det = b1[0] * b2[1] - b1[1] * b2[0];
  Vec2 ell{(t[0] * b2[1] - t[1] * b1[1]) / det, (b1[0] * t[1] - b2[0] * t[0]) / det};

  const PlanarLattice dual = PlanarLattice::from_generators(gens).dual();
  auto c = dual.real_coordinates(ell);
  c = {frac(c[0]), frac(c[1])};
  std::optional<Vec2> best;
  Rational best_norm;
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      const Rational cm = c[0] + m, cn = c[1] + n;
      Vec2 p{cm * dual.basis[0][0] + cn * dual.basis[1][0], cm * dual.basis[0][1] + cn * dual.basis[1][1]};
      const Rational nrm = dot(p, p);
      if (!best || nrm < best_norm || (nrm == best_norm && p < *best)) {
        best = p;
        best_norm = nrm;
      }
    }
  const Vec2 p = *best;
  const Rational r(spec.r);
  if (!is_integer(p[0] / r) || !is_integer(p[1] / r)) throw NotFound("solve_lambda_mu0: no solution in rZ x rZ");
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!is_integer(dot(p, gens[k]) - phases[k])) throw NotFound("solve_lambda_mu0: pairing check failed");
  return {num(p[0]), num(p[1])};
}

}  // namespace nilzeta
