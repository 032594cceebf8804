#include "ratbase/arith.hpp"

#include <limits>
#include <stdexcept>

namespace ratbase {

namespace {

template <typename Int>
Int modinv_impl(Int x, Int m) {
  Int r0 = m, r1 = x % m;
  if (r1 < 0) r1 += m;
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("modinv: argument not invertible");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

}  // namespace

BigInt modinv(const BigInt& x, const BigInt& m) {
  if (m == 1) return 0;
  return modinv_impl<BigInt>(x, m);
}

std::int64_t modinv(std::int64_t x, std::int64_t m) {
  if (m == 1) return 0;
  return modinv_impl<std::int64_t>(x, m);
}

BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow: zero to negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1, acc = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result *= acc;
    acc *= acc;
    e >>= 1;
  }
  return result;
}

std::int64_t ipow(std::int64_t base, unsigned exponent) {
  std::int64_t out = 0;
  if (!ipow_checked(base, exponent, std::numeric_limits<std::int64_t>::max(), out))
    throw std::overflow_error("ipow overflow");
  return out;
}

bool ipow_checked(std::int64_t base, unsigned exponent, std::int64_t limit, std::int64_t& out) {
  i128 acc = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    acc *= base;
    if (acc > limit || acc < -static_cast<i128>(limit)) return false;
  }
  out = static_cast<std::int64_t>(acc);
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int valuation(const Rational& q, std::int64_t p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  BigInt n = numer(q), d = denom(q);
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

BigInt to_bigint(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt out = (hi << 64) | BigInt(static_cast<std::uint64_t>(u));
  return neg ? BigInt(-out) : out;
}

bool fits_i128(const BigInt& v) {
  static const BigInt lim = (BigInt(1) << 126);
  return v < lim && v > -lim;
}

i128 to_i128(const BigInt& v) {
  if (!fits_i128(v)) throw std::overflow_error("value does not fit in 128 bits");
  bool neg = v < 0;
  BigInt u = neg ? BigInt(-v) : v;
  auto lo = static_cast<std::uint64_t>(u & BigInt(std::numeric_limits<std::uint64_t>::max()));
  auto hi = static_cast<std::uint64_t>(u >> 64);
  i128 out = (static_cast<i128>(hi) << 64) | static_cast<i128>(lo);
  return neg ? -out : out;
}

std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt n(text.substr(0, slash)), d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ratbase
