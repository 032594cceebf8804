#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratbase {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using i128 = __int128;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

// Floor of a rational, exact.
inline BigInt floor(const Rational& q) {
  BigInt n = numer(q), d = denom(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

// Nonnegative residue of x modulo m (m > 0).
inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline i128 mod(i128 x, i128 m) {
  i128 r = x % m;
  return r < 0 ? r + m : r;
}

inline i128 floor_div(i128 x, i128 m) {
  i128 q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

BigInt modinv(const BigInt& x, const BigInt& m);
std::int64_t modinv(std::int64_t x, std::int64_t m);

BigInt pow(const BigInt& base, unsigned exponent);
Rational pow(const Rational& base, int exponent);
std::int64_t ipow(std::int64_t base, unsigned exponent);

// Checked power; returns false on overflow past `limit`.
bool ipow_checked(std::int64_t base, unsigned exponent, std::int64_t limit, std::int64_t& out);

// Prime factorization of a small positive integer as (p, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// p-adic valuation of a nonzero rational.
int valuation(const Rational& q, std::int64_t p);

BigInt to_bigint(i128 v);
i128 to_i128(const BigInt& v);
bool fits_i128(const BigInt& v);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace ratbase
