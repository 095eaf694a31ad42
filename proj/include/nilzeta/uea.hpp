#pragma once

#include "nilzeta/qsqrt2.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace nilzeta {

// Exponents (e1..e5) of X1^e1 X2^e2 X3^e3 X4^e4 X5^e5.
using PBWMonomial = std::array<std::uint8_t, 5>;

int weight(const PBWMonomial& m);        // e1+e2+2e3+3e4+3e5
int total_degree(const PBWMonomial& m);  // e1+...+e5
std::vector<int> word_of(const PBWMonomial& m);  // generator indices 1..5

struct UEAPoly {
  std::map<PBWMonomial, QSqrt2> terms;

  UEAPoly() = default;
  explicit UEAPoly(const QSqrt2& c);  // constant

  bool is_zero() const { return terms.empty(); }
  bool operator==(const UEAPoly&) const = default;
  void add_term(const PBWMonomial& m, const QSqrt2& c);
  int weighted_degree() const;  // -1 for zero

  UEAPoly& operator+=(const UEAPoly& o);
  UEAPoly& operator-=(const UEAPoly& o);
  UEAPoly& operator*=(const QSqrt2& c);
};

UEAPoly operator+(UEAPoly p, const UEAPoly& q);
UEAPoly operator-(UEAPoly p, const UEAPoly& q);
UEAPoly operator-(UEAPoly p);
UEAPoly operator*(QSqrt2 c, UEAPoly p);
UEAPoly operator*(const UEAPoly& p, const UEAPoly& q);

UEAPoly generator(int i);  // X_i, i in 1..5
UEAPoly normal_form(const std::vector<int>& word, const QSqrt2& coeff = QSqrt2(1));
// Same result, descents chosen at random (confluence testing).
UEAPoly normal_form_randomized(const std::vector<int>& word, const QSqrt2& coeff, std::mt19937_64& rng);
UEAPoly multiply_poly(const UEAPoly& p, const UEAPoly& q);
// Antiautomorphism X_i -> -X_i, reversing products.
UEAPoly antipode(const UEAPoly& p);

std::string to_string(const UEAPoly& p);

struct UEAMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<UEAPoly> entries;  // row-major

  UEAMatrix() = default;
  UEAMatrix(int r, int c);
  UEAPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i * cols + j)]; }
  const UEAPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
  bool is_zero() const;
  int weighted_degree() const;
  bool operator==(const UEAMatrix&) const = default;
};

UEAMatrix identity_matrix(int n);
UEAMatrix rumin_matrix(int q);  // q in 0..4
UEAMatrix compose(const UEAMatrix& a, const UEAMatrix& b);
UEAMatrix formal_adjoint(const UEAMatrix& a);

inline constexpr std::array<int, 6> kCohomologyDims{1, 2, 3, 3, 2, 1};

}  // namespace nilzeta
