#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ratbase/adelic.hpp"
#include "ratbase/patterns.hpp"
#include "ratbase/tiles.hpp"

namespace ratbase {

// Urysohn functions on K_alpha / Phi(Z[alpha]):
//   g_{x,r}(z) = a^r mu((z + D_r) cap (Phi(x) + Phi(Z[alpha]) + D_r)),
//   f_{d,r}    = sum of g_{x,r} over the a^{r-1} corners x of F_{d,r},
// with Fourier expansions h(z) = sum_xi c_xi chi(xi z) over xi in Z / b^r.

struct FourierCoefficient {
  Rational frequency;
  std::complex<double> value;
  double magnitude = 0.0;
};

/// c_{x,r,xi}, the coefficient of chi(xi z) in g_{x,r}. x must be a level-r corner (x in a^{-r} Z[1/b]).
std::complex<double> coeff_g(const AdeleContext& ctx, const Rational& x, int r, const Rational& xi);

enum class CoeffStrategy { Auto, Direct, Factorized };

/// c'_{d,r,xi}: sum of c_{x,r,xi} over the corners of F_{d,r}. Factorized
/// evaluation uses the geometric sums over eps_2..eps_r and returns exact zeros
/// when one of them vanishes.
std::complex<double> coeff_f(const AdeleContext& ctx, Digit d, int r, const Rational& xi,
                             CoeffStrategy strategy = CoeffStrategy::Auto);

FourierCoefficient make_coefficient(const Rational& xi, std::complex<double> value);

/// Exact g_{x,r}(z) and f_{d,r}(z) at a diagonal rational point z.
Rational eval_g_direct(const AdeleContext& ctx, const Rational& x, int r, const Rational& z);
Rational eval_urysohn_direct(const AdeleContext& ctx, Digit d, int r, const Rational& z);
/// Same as eval_urysohn_direct for the point num / a^e, via the level table.
Rational eval_urysohn_direct(const LevelTable& table, Digit d, const BigInt& num, int e);

/// Bound on sum_{|xi b^r| > cutoff} |c'_{d,r,xi}|: 2 a^{2r-1} / (pi^2 floor(cutoff)).
double series_tail_bound(const AdeleContext& ctx, int r, double cutoff);

struct SeriesValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

/// Truncated Fourier series of f_{d,r} with precomputed coefficients for
/// |xi b^r| <= max_cutoff. Terms are summed in +-xi pairs.
class UrysohnSeries {
 public:
  UrysohnSeries(const AdeleContext& ctx, Digit d, int r, std::int64_t max_cutoff);

  SeriesValue evaluate(const Rational& z) const { return evaluate(z, max_cutoff_); }
  SeriesValue evaluate(const Rational& z, std::int64_t cutoff) const;

  const std::vector<FourierCoefficient>& positive() const { return pos_; }
  const std::vector<FourierCoefficient>& negative() const { return neg_; }

 private:
  AdeleContext ctx_;
  Digit d_;
  int r_;
  std::int64_t max_cutoff_;
  std::complex<double> c0_;
  std::vector<FourierCoefficient> pos_, neg_;  // index j-1 holds xi = +-j / b^r
};

SeriesValue eval_urysohn_series(const AdeleContext& ctx, Digit d, int r, const Rational& z, std::int64_t cutoff);

/// Sum over 1 <= n <= N of prod_j f_{w_j,r}(b n / alpha^{k+j+1}), exactly.
Rational urysohn_pattern_estimate(const Pattern& w, int k, int r, std::uint64_t N);

/// Coefficient table rows for |xi b^r| <= max_xi, ascending in xi.
std::vector<FourierCoefficient> coefficient_table(const AdeleContext& ctx, Digit d, int r, std::int64_t max_xi);

/// CSV with header xi_numerator,r,digit,re,im,abs (xi_numerator = xi b^r).
void write_coefficients_csv(std::ostream& out, const AdeleContext& ctx, Digit d, int r,
                            const std::vector<FourierCoefficient>& rows);

}  // namespace ratbase
