#include "ratbase/adelic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ratbase {

AdeleContext::AdeleContext(Base base) : base_(std::move(base)) {}

AdelePoint AdelePoint::diagonal(const AdeleContext& ctx, const Rational& q) {
  return AdelePoint{q, std::vector<Rational>(ctx.primes().size(), q)};
}

bool AdelePoint::is_diagonal() const {
  for (const auto& z : padic)
    if (z != real) return false;
  return true;
}

AdelePoint operator+(const AdelePoint& x, const AdelePoint& y) {
  if (x.padic.size() != y.padic.size()) throw std::invalid_argument("adele points from different contexts");
  AdelePoint out{x.real + y.real, x.padic};
  for (std::size_t i = 0; i < out.padic.size(); ++i) out.padic[i] += y.padic[i];
  return out;
}

AdelePoint operator-(const AdelePoint& x, const AdelePoint& y) {
  if (x.padic.size() != y.padic.size()) throw std::invalid_argument("adele points from different contexts");
  AdelePoint out{x.real - y.real, x.padic};
  for (std::size_t i = 0; i < out.padic.size(); ++i) out.padic[i] -= y.padic[i];
  return out;
}

AdelePoint operator*(const Rational& xi, const AdelePoint& z) {
  AdelePoint out{xi * z.real, z.padic};
  for (auto& c : out.padic) c *= xi;
  return out;
}

Rational frac_p(std::int64_t p, const Rational& x) {
  // x = u / (p^e w) with p not dividing w; lambda_p(x) = (u w^{-1} mod p^e) / p^e.
  BigInt u = numer(x), den = denom(x);
  BigInt pe = 1;
  while (den % p == 0) {
    den /= p;
    pe *= p;
  }
  if (pe == 1) return 0;
  BigInt s = mod(u * modinv(mod(den, pe), pe), pe);
  return Rational(s, pe);
}

namespace {

Rational frac_one(const Rational& q) { return q - Rational(floor(q)); }

}  // namespace

Rational character_phase(const AdeleContext& ctx, const AdelePoint& z) {
  const auto& primes = ctx.primes();
  if (z.padic.size() != primes.size()) throw std::invalid_argument("adele point does not match context");
  Rational sum = -z.real;
  for (std::size_t i = 0; i < primes.size(); ++i) sum += frac_p(primes[i].first, z.padic[i]);
  return frac_one(sum);
}

std::complex<double> unit(const Rational& theta) {
  double t = to_double(frac_one(theta));
  // Fold into [-1/2, 1/2) so the angle stays small.
  if (t >= 0.5) t -= 1.0;
  double angle = 2.0 * std::numbers::pi * t;
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> character(const AdeleContext& ctx, const AdelePoint& z) {
  return unit(character_phase(ctx, z));
}

Rational char_tilde_phase(const AdeleContext& ctx, const Rational& xi) {
  return character_phase(ctx, AdelePoint::diagonal(ctx, xi));
}

std::complex<double> char_tilde(const AdeleContext& ctx, const Rational& xi) {
  return unit(char_tilde_phase(ctx, xi));
}

bool in_z_alpha(const AdeleContext& ctx, const Rational& xi) {
  BigInt den = denom(xi);
  for (const auto& [p, e] : ctx.primes())
    while (den % p == 0) den /= p;
  return den == 1;
}

bool in_fundamental_box(const AdeleContext& ctx, const AdelePoint& z) {
  if (z.real < 0 || z.real >= 1) return false;
  const auto& primes = ctx.primes();
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (z.padic[i] != 0 && denom(z.padic[i]) % primes[i].first == 0) return false;
  return true;
}

LatticeReduction reduce_mod_lattice(const AdeleContext& ctx, const AdelePoint& z) {
  const auto& primes = ctx.primes();
  if (z.padic.size() != primes.size()) throw std::invalid_argument("adele point does not match context");
  Rational lam = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) lam += frac_p(primes[i].first, z.padic[i]);
  Rational y = lam + Rational(floor(z.real - lam));
  return LatticeReduction{y, z - AdelePoint::diagonal(ctx, y)};
}

}  // namespace ratbase
