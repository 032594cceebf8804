#include "ratbase/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ratbase {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

cd unit_double(double t) {
  t -= std::floor(t);
  if (t >= 0.5) t -= 1.0;
  return {std::cos(2 * kPi * t), std::sin(2 * kPi * t)};
}

Rational frac1(const Rational& q) { return q - Rational(floor(q)); }

// True when xi b^r is an integer; the integer goes to j.
bool on_grid(const AdeleContext& ctx, const Rational& xi, int r, BigInt& j) {
  Rational scaled = xi * pow(BigInt(ctx.base().b()), static_cast<unsigned>(r));
  if (denom(scaled) != 1) return false;
  j = numer(scaled);
  return true;
}

// a^r sin^2(pi alpha^{-r} xi) / (pi^2 j^2), the modulus of c_{x,r,xi}.
double kernel(const AdeleContext& ctx, int r, const Rational& xi, const BigInt& j) {
  double s = std::sin(kPi * to_double(frac1(xi * pow(ctx.alpha(), -r))));
  double jd = j.convert_to<double>();
  return std::pow(static_cast<double>(ctx.base().a()), r) * s * s / (kPi * kPi * jd * jd);
}

void require_corner(const AdeleContext& ctx, const Rational& x, int r) {
  if (r < 0) throw std::invalid_argument("level must be >= 0");
  if (!in_z_alpha(ctx, x * pow(BigInt(ctx.base().a()), static_cast<unsigned>(r))))
    throw std::invalid_argument(to_string(x) + " is not a level-" + std::to_string(r) + " corner");
}

// Geometric sum sum_{e<a} e(e theta) for an exact phase theta.
cd geometric(std::int64_t a, const Rational& theta) {
  if (denom(theta) == 1) return static_cast<double>(a);
  if (denom(theta * a) == 1) return 0.0;
  cd sum = 0.0;
  if (a <= 64) {
    for (std::int64_t e = 0; e < a; ++e) sum += unit(theta * e);
    return sum;
  }
  return (1.0 - unit(theta * a)) / (1.0 - unit(theta));
}

cd coeff_f_factorized(const AdeleContext& ctx, Digit d, int r, const Rational& xi, const BigInt& j) {
  const std::int64_t a = ctx.base().a();
  cd prod = unit(char_tilde_phase(ctx, -Rational(d) * xi / ctx.alpha()));
  for (int k = 2; k <= r; ++k) {
    cd g = geometric(a, char_tilde_phase(ctx, -xi * pow(ctx.alpha(), -k)));
    if (g == 0.0) return 0.0;
    prod *= g;
  }
  return kernel(ctx, r, xi, j) * prod;
}

bool vanishes(const AdeleContext& ctx, int r, const Rational& xi) {
  const std::int64_t a = ctx.base().a();
  for (int k = 2; k <= r; ++k) {
    Rational theta = char_tilde_phase(ctx, -xi * pow(ctx.alpha(), -k));
    if (denom(theta) != 1 && denom(theta * a) == 1) return true;
  }
  return false;
}

// Phases of chi~(j q) for j = 1, 2, ...: with q = N / (D_b D_o), D_b built
// from primes of b and D_o prime to b, the phase is -(j N D_b^{-1} mod D_o) / D_o.
class PhaseSteps {
 public:
  PhaseSteps(const AdeleContext& ctx, const Rational& q) : ctx_(ctx), q_(q) {
    BigInt db = 1, dobig = denom(q);
    for (const auto& [p, e] : ctx.primes())
      while (dobig % p == 0) {
        dobig /= p;
        db *= p;
      }
    if (dobig < (BigInt(1) << 62)) {
      fast_ = true;
      do_ = static_cast<std::int64_t>(dobig);
      step_ = do_ == 1 ? 0 : static_cast<std::int64_t>(mod(numer(q) * modinv(mod(db, dobig), dobig), dobig));
    }
  }

  double phase(std::int64_t j) const {
    if (!fast_) return to_double(char_tilde_phase(ctx_, q_ * j));
    if (do_ == 1) return 0.0;
    auto s = static_cast<std::int64_t>(mod(static_cast<i128>(j) * step_, static_cast<i128>(do_)));
    return -static_cast<double>(s) / static_cast<double>(do_);
  }

 private:
  const AdeleContext& ctx_;
  Rational q_;
  bool fast_ = false;
  std::int64_t do_ = 1, step_ = 0;
};

}  // namespace

std::complex<double> coeff_g(const AdeleContext& ctx, const Rational& x, int r, const Rational& xi) {
  require_corner(ctx, x, r);
  if (xi == 0) return std::pow(static_cast<double>(ctx.base().a()), -r);
  BigInt j;
  if (!on_grid(ctx, xi, r, j)) return 0.0;
  return kernel(ctx, r, xi, j) * unit(char_tilde_phase(ctx, -x * xi));
}

std::complex<double> coeff_f(const AdeleContext& ctx, Digit d, int r, const Rational& xi, CoeffStrategy strategy) {
  if (r < 1) throw std::invalid_argument("coeff_f: r must be >= 1");
  const std::int64_t a = ctx.base().a();
  if (d >= static_cast<std::uint64_t>(a)) throw std::invalid_argument("coeff_f: digit outside alphabet");
  if (xi == 0 && strategy != CoeffStrategy::Direct) return 1.0 / static_cast<double>(a);
  BigInt j;
  if (!on_grid(ctx, xi, r, j)) return 0.0;
  if (strategy == CoeffStrategy::Auto) {
    if (vanishes(ctx, r, xi)) return 0.0;
    std::int64_t prefixes = 0;
    bool small = ipow_checked(a, static_cast<unsigned>(r - 1), 16, prefixes);
    strategy = small ? CoeffStrategy::Direct : CoeffStrategy::Factorized;
  }
  if (strategy == CoeffStrategy::Factorized) return coeff_f_factorized(ctx, d, r, xi, j);
  cd sum = 0.0;
  for (const auto& x : tile_approx(ctx, d, r).corners) sum += coeff_g(ctx, x, r, xi);
  return sum;
}

FourierCoefficient make_coefficient(const Rational& xi, std::complex<double> value) {
  return FourierCoefficient{xi, value, std::abs(value)};
}

Rational eval_g_direct(const AdeleContext& ctx, const Rational& x, int r, const Rational& z) {
  require_corner(ctx, x, r);
  BoxLocation loc = locate(ctx, AdelePoint::diagonal(ctx, z), r);
  BigInt target = lattice_class(ctx, x, r);
  BigInt right = lattice_class(ctx, loc.corner + pow(ctx.alpha(), -r), r);
  Rational out = 0;
  if (loc.cls == target) out += 1 - loc.offset;
  if (right == target) out += loc.offset;
  return out;
}

Rational eval_urysohn_direct(const AdeleContext& ctx, Digit d, int r, const Rational& z) {
  if (r < 1) throw std::invalid_argument("eval_urysohn_direct: r must be >= 1");
  BoxLocation loc = locate(ctx, AdelePoint::diagonal(ctx, z), r);
  BigInt right = lattice_class(ctx, loc.corner + pow(ctx.alpha(), -r), r);
  Rational out = 0;
  if (class_prefix(ctx, loc.cls, r).front() == d) out += 1 - loc.offset;
  if (class_prefix(ctx, right, r).front() == d) out += loc.offset;
  return out;
}

Rational eval_urysohn_direct(const LevelTable& table, Digit d, const BigInt& num, int e) {
  const Base& base = table.context().base();
  FastLocation loc = locate_fast(table, num, e);
  i128 br = ipow(base.b(), static_cast<unsigned>(table.level()));
  auto right = static_cast<std::int64_t>(mod(loc.corner_num + br, static_cast<i128>(table.size())));
  Rational t(to_bigint(loc.offset_num), to_bigint(loc.offset_den));
  Rational out = 0;
  if (table.digit_of_class(loc.cls) == d) out += 1 - t;
  if (table.digit_of_class(right) == d) out += t;
  return out;
}

double series_tail_bound(const AdeleContext& ctx, int r, double cutoff) {
  double xi = std::floor(cutoff);
  if (xi < 1) throw std::invalid_argument("series_tail_bound: cutoff must be >= 1");
  return 2.0 * std::pow(static_cast<double>(ctx.base().a()), 2 * r - 1) / (kPi * kPi * xi);
}

UrysohnSeries::UrysohnSeries(const AdeleContext& ctx, Digit d, int r, std::int64_t max_cutoff)
    : ctx_(ctx), d_(d), r_(r), max_cutoff_(max_cutoff) {
  if (max_cutoff < ipow(ctx.base().b(), static_cast<unsigned>(r)))
    throw std::invalid_argument("series cutoff must be at least b^r");
  c0_ = coeff_f(ctx, d, r, 0);
  BigInt br = pow(BigInt(ctx.base().b()), static_cast<unsigned>(r));
  pos_.reserve(static_cast<std::size_t>(max_cutoff));
  neg_.reserve(static_cast<std::size_t>(max_cutoff));
  for (std::int64_t j = 1; j <= max_cutoff; ++j) {
    Rational xi(j, br);
    pos_.push_back(make_coefficient(xi, coeff_f(ctx, d, r, xi)));
    neg_.push_back(make_coefficient(-xi, coeff_f(ctx, d, r, -xi)));
  }
}

SeriesValue UrysohnSeries::evaluate(const Rational& z, std::int64_t cutoff) const {
  if (cutoff < 1 || cutoff > max_cutoff_) throw std::invalid_argument("cutoff outside the precomputed range");
  PhaseSteps steps(ctx_, z / pow(BigInt(ctx_.base().b()), static_cast<unsigned>(r_)));
  cd sum = 0.0;
  for (std::int64_t j = 1; j <= cutoff; ++j) {
    auto i = static_cast<std::size_t>(j - 1);
    if (pos_[i].magnitude == 0.0 && neg_[i].magnitude == 0.0) continue;
    cd u = unit_double(steps.phase(j));
    sum += pos_[i].value * u + neg_[i].value * std::conj(u);
  }
  return SeriesValue{c0_ + sum, series_tail_bound(ctx_, r_, static_cast<double>(cutoff))};
}

SeriesValue eval_urysohn_series(const AdeleContext& ctx, Digit d, int r, const Rational& z, std::int64_t cutoff) {
  return UrysohnSeries(ctx, d, r, cutoff).evaluate(z);
}

Rational urysohn_pattern_estimate(const Pattern& w, int k, int r, std::uint64_t N) {
  if (k < 0) throw std::invalid_argument("urysohn_pattern_estimate: k must be >= 0");
  AdeleContext ctx(w.base());
  LevelTable table(ctx, r);
  const BigInt b = w.base().b();
  std::vector<BigInt> scale;
  for (std::size_t j = 0; j < w.size(); ++j) scale.push_back(pow(b, static_cast<unsigned>(k + static_cast<int>(j) + 2)));
  Rational total = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    Rational prod = 1;
    for (std::size_t j = 0; j < w.size() && prod != 0; ++j)
      prod *= eval_urysohn_direct(table, w.at(j), scale[j] * n, k + static_cast<int>(j) + 1);
    total += prod;
  }
  return total;
}

std::vector<FourierCoefficient> coefficient_table(const AdeleContext& ctx, Digit d, int r, std::int64_t max_xi) {
  if (max_xi < 0) throw std::invalid_argument("max_xi must be >= 0");
  BigInt br = pow(BigInt(ctx.base().b()), static_cast<unsigned>(r));
  std::vector<FourierCoefficient> rows;
  for (std::int64_t j = -max_xi; j <= max_xi; ++j) {
    Rational xi(j, br);
    rows.push_back(make_coefficient(xi, coeff_f(ctx, d, r, xi)));
  }
  return rows;
}

namespace {

std::string number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_coefficients_csv(std::ostream& out, const AdeleContext& ctx, Digit d, int r,
                            const std::vector<FourierCoefficient>& rows) {
  BigInt br = pow(BigInt(ctx.base().b()), static_cast<unsigned>(r));
  out << "xi_numerator,r,digit,re,im,abs\n";
  for (const auto& c : rows) {
    Rational jn = c.frequency * br;
    out << to_string(jn) << ',' << r << ',' << d << ',' << number(c.value.real()) << ',' << number(c.value.imag())
        << ',' << number(c.magnitude) << '\n';
  }
}

}  // namespace ratbase
