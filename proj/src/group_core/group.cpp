#include "nilzeta/group.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace nilzeta {

bool GroupElement::is_identity() const {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

GroupElement identity() { return {}; }

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  const auto& x = a.x;
  const auto& y = b.x;
  const Rational w = x[0] * y[1] - x[1] * y[0];
  return {x[0] + y[0],
          x[1] + y[1],
          x[2] + y[2] + w / 2,
          x[3] + y[3] + (x[0] * y[2] - x[2] * y[0]) / 2 + (x[0] - y[0]) * w / 12,
          x[4] + y[4] + (x[1] * y[2] - x[2] * y[1]) / 2 + (x[1] - y[1]) * w / 12};
}

GroupElement inverse(const GroupElement& a) {
  return {-a[0], -a[1], -a[2], -a[3], -a[4]};
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  const auto& x = a.x;
  const auto& y = b.x;
  const Rational w = x[0] * y[1] - x[1] * y[0];
  return {0, 0, w,
          x[0] * y[2] - x[2] * y[0] + (x[0] + y[0]) * w / 2,
          x[1] * y[2] - x[2] * y[1] + (x[1] + y[1]) * w / 2};
}

GroupElement power(const GroupElement& x, long long k) {
  GroupElement base = k < 0 ? inverse(x) : x;
  unsigned long long n = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                               : static_cast<unsigned long long>(k);
  GroupElement acc;
  while (n) {
    if (n & 1ULL) acc = multiply(acc, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return acc;
}

GradedDilation::GradedDilation(Rational t) : tau(std::move(t)) {
  if (tau <= 0) throw std::invalid_argument("dilation parameter must be positive");
}

GroupElement dilate(const GradedDilation& d, const GroupElement& x) {
  const Rational t2 = d.tau * d.tau;
  const Rational t3 = t2 * d.tau;
  return {d.tau * x[0], d.tau * x[1], t2 * x[2], t3 * x[3], t3 * x[4]};
}

std::array<double, 5> dilate(double tau, const std::array<double, 5>& x) {
  if (!(tau > 0)) throw std::invalid_argument("dilation parameter must be positive");
  return {tau * x[0], tau * x[1], tau * tau * x[2], tau * tau * tau * x[3], tau * tau * tau * x[4]};
}

GroupElement lie_bracket(const GroupElement& a, const GroupElement& b) {
  const auto& x = a.x;
  const auto& y = b.x;
  return {0, 0, x[0] * y[1] - x[1] * y[0], x[0] * y[2] - x[2] * y[0], x[1] * y[2] - x[2] * y[1]};
}

std::string to_string(const GroupElement& g) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) {
    if (i) s += ",";
    s += to_string(g[i]);
  }
  return s + ")";
}

GroupElement parse_group_element(const std::string& csv) {
  std::string body = csv;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<Rational> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (parts.size() != 5) throw std::invalid_argument("group element needs 5 coordinates: " + csv);
  return {parts[0], parts[1], parts[2], parts[3], parts[4]};
}

}  // namespace nilzeta
