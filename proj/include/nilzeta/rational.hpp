#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nilzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q", and finite decimals such as "-0.125" or "2.5e-3".
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise; always reduced.
std::string to_string(const Rational& x);

inline BigInt num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rational& x) { return boost::multiprecision::denominator(x); }

bool is_integer(const Rational& x);
BigInt floor(const Rational& x);
Rational frac(const Rational& x);  // in [0,1)
double to_double(const Rational& x);
long double to_long_double(const Rational& x);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);  // result in [0,|b|)

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

}  // namespace nilzeta
