#include "nilzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilzeta {

namespace {

BigInt parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

BigInt pow10(long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

Rational parse_decimal(std::string_view s) {
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    exp10 = static_cast<long>(parse_int(s.substr(epos + 1)));
    s = s.substr(0, epos);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto dot = s.find('.');
  std::string digits;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exp10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal");
  Rational v(parse_int(digits));
  if (exp10 >= 0)
    v *= Rational(pow10(exp10));
  else
    v /= Rational(pow10(-exp10));
  return neg ? Rational(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt p = parse_int(text.substr(0, slash));
    BigInt q = parse_int(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
  return Rational(parse_int(text));
}

std::string to_string(const Rational& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

bool is_integer(const Rational& x) { return den(x) == 1; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt m = a % b;
  if (m < 0) m += (b < 0 ? BigInt(-b) : b);
  return m;
}

BigInt floor(const Rational& x) { return floor_div(num(x), den(x)); }

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

double to_double(const Rational& x) { return x.convert_to<double>(); }

long double to_long_double(const Rational& x) {
  return num(x).convert_to<long double>() / den(x).convert_to<long double>();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = gcd(a, b);
  BigInt l = a / g * b;
  return l < 0 ? BigInt(-l) : l;
}

}  // namespace nilzeta
