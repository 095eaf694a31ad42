#pragma once

#include "nilzeta/lattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace nilzeta {

struct ScalarLabel {
  double alpha = 0, beta = 0;
};
struct SchrodingerLabel {
  double hbar = 1;
};
struct GenericLabel {
  double lambda = 1, mu = 0, nu = 0;
};
using RepLabel = std::variant<ScalarLabel, SchrodingerLabel, GenericLabel>;

void validate_label(const RepLabel& l);
std::string label_type(const RepLabel& l);  // "scalar" | "schrodinger" | "generic"
std::string to_string(const RepLabel& l);

// Exact labels as produced by the decomposition.
struct ExactLabel {
  enum class Kind { Scalar, Schrodinger, Generic } kind = Kind::Scalar;
  std::vector<Rational> params;  // (alpha,beta) | (hbar) | (lambda,mu,nu)

  RepLabel numeric() const;
  bool operator==(const ExactLabel&) const = default;
};
bool operator<(const ExactLabel& a, const ExactLabel& b);

struct DecompositionTerm {
  ExactLabel label;
  Rational multiplicity;  // integer except possibly Schrodinger (|hbar|)
  bool operator==(const DecompositionTerm&) const = default;
};

long long mult_count(long long l, long long r, long long w, long long n);

Rational w_of(const LatticeSpec& spec, const Character& chi, const BigInt& lambda, const BigInt& mu);
Rational nu0_of(const LatticeSpec& spec, const Character& chi, const BigInt& lambda, const BigInt& mu);

int scalar_mult(const LatticeSpec& spec, const Character& chi, const Rational& alpha, const Rational& beta);
Rational schrodinger_mult(const LatticeSpec& spec, const Character& chi, const Rational& hbar);
// (lambda, mu) in (lambda0, mu0) + (Gamma'')^*.
bool generic_admissible(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu);
long long generic_mult(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu,
                       const Rational& nu);
// Real-nu variant: the congruence is decided within `tol`.
long long generic_mult(const LatticeSpec& spec, const Character& chi, const Rational& lambda, const Rational& mu,
                       double nu, double tol = 1e-12);

// Admissible central parameters with lambda^2+mu^2 <= radius^2, sorted.
std::vector<std::pair<BigInt, BigInt>> generic_centers(const LatticeSpec& spec, const Character& chi, double radius);

std::vector<DecompositionTerm> decompose(const LatticeSpec& spec, const Character& chi, double cutoff);

}  // namespace nilzeta
