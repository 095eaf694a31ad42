#pragma once

#include "nilzeta/rational.hpp"

#include <array>
#include <string>

namespace nilzeta {

// Point of G in exponential coordinates w.r.t. X1..X5.
struct GroupElement {
  std::array<Rational, 5> x{};

  GroupElement() = default;
  GroupElement(Rational a, Rational b, Rational c, Rational d, Rational e)
      : x{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e)} {}

  const Rational& operator[](int i) const { return x[i]; }
  Rational& operator[](int i) { return x[i]; }
  bool operator==(const GroupElement&) const = default;
  bool is_identity() const;
};

inline constexpr std::array<int, 5> kWeights{1, 1, 2, 3, 3};

GroupElement identity();
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement commutator(const GroupElement& x, const GroupElement& y);
GroupElement power(const GroupElement& x, long long k);

struct GradedDilation {
  Rational tau;
  explicit GradedDilation(Rational t);
};
GroupElement dilate(const GradedDilation& d, const GroupElement& x);
std::array<double, 5> dilate(double tau, const std::array<double, 5>& x);

// Lie bracket of g in these coordinates.
GroupElement lie_bracket(const GroupElement& x, const GroupElement& y);

std::string to_string(const GroupElement& g);     // "(x1,x2,x3,x4,x5)"
GroupElement parse_group_element(const std::string& csv);  // "x1,x2,x3,x4,x5"

}  // namespace nilzeta
