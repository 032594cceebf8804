#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ratbase/arith.hpp"
#include "ratbase/base.hpp"

namespace ratbase {

/// The ring K_alpha = R x prod_{p | b} Q_p for a fixed base, restricted to
/// rational coordinates. Immutable and shareable across threads.
class AdeleContext {
 public:
  explicit AdeleContext(Base base);

  const Base& base() const { return base_; }
  Rational alpha() const { return base_.alpha(); }
  /// (p, v_p(b)) for each prime dividing b; the order fixes AdelePoint::padic.
  const std::vector<std::pair<std::int64_t, int>>& primes() const { return base_.primes_of_b(); }

 private:
  Base base_;
};

/// A point of K_alpha with exact rational coordinates: the real place and one
/// coordinate per prime of b (ordered as AdeleContext::primes()).
struct AdelePoint {
  Rational real;
  std::vector<Rational> padic;

  static AdelePoint diagonal(const AdeleContext& ctx, const Rational& q);
  bool is_diagonal() const;

  friend bool operator==(const AdelePoint& x, const AdelePoint& y) {
    return x.real == y.real && x.padic == y.padic;
  }
};

AdelePoint operator+(const AdelePoint& x, const AdelePoint& y);
AdelePoint operator-(const AdelePoint& x, const AdelePoint& y);
/// Action of Q on K_alpha: xi * (z_p) = (xi z_p).
AdelePoint operator*(const Rational& xi, const AdelePoint& z);

/// lambda_p: the p-adic fractional part, a rational in [0,1) with p-power denominator.
Rational frac_p(std::int64_t p, const Rational& x);

/// Exact phase theta in [0,1) with chi(z) = e(theta).
Rational character_phase(const AdeleContext& ctx, const AdelePoint& z);
std::complex<double> character(const AdeleContext& ctx, const AdelePoint& z);

/// chi~(xi) = chi(Phi(xi)).
Rational char_tilde_phase(const AdeleContext& ctx, const Rational& xi);
std::complex<double> char_tilde(const AdeleContext& ctx, const Rational& xi);

/// e(theta) for an exact phase, reduced mod 1 before going to floating point.
std::complex<double> unit(const Rational& theta);

/// xi in Z[alpha] = Z[1/b].
bool in_z_alpha(const AdeleContext& ctx, const Rational& xi);

/// Membership in the half-open fundamental box D_0: real part in [0,1), p-adic parts in Z_p.
bool in_fundamental_box(const AdeleContext& ctx, const AdelePoint& z);

struct LatticeReduction {
  Rational y;             // in Z[alpha]
  AdelePoint residual;    // z - Phi(y), in D_0
};

/// Unique y in Z[alpha] with z - Phi(y) in the half-open D_0.
LatticeReduction reduce_mod_lattice(const AdeleContext& ctx, const AdelePoint& z);

}  // namespace ratbase
