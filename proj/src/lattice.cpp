#include <algorithm>
#include <stdexcept>

#include "ratbase/tiles.hpp"

namespace ratbase {

BigInt lattice_class(const AdeleContext& ctx, const Rational& y, int r) {
  const Base& base = ctx.base();
  BigInt ar = pow(BigInt(base.a()), static_cast<unsigned>(r));
  BigInt den = denom(y), bpart = 1;
  for (const auto& [p, e] : ctx.primes()) {
    while (den % p == 0) {
      den /= p;
      bpart *= p;
    }
  }
  if (ar % den != 0)
    throw std::invalid_argument(to_string(y) + " is not a level-" + std::to_string(r) + " box corner");
  BigInt cls = numer(y) * (ar / den) * modinv(mod(bpart, ar), ar);
  return mod(cls, ar);
}

std::vector<Digit> class_prefix(const AdeleContext& ctx, const BigInt& cls, int r) {
  const BigInt a = ctx.base().a(), b = ctx.base().b();
  std::vector<Digit> eps(static_cast<std::size_t>(r));
  BigInt ak = pow(a, static_cast<unsigned>(r));
  BigInt t = mod(cls, ak);
  for (int k = r; k >= 1; --k) {
    BigInt bk = pow(b, static_cast<unsigned>(k));
    BigInt e = mod(t * modinv(mod(bk, a), a), a);
    eps[static_cast<std::size_t>(k - 1)] = static_cast<Digit>(e);
    ak /= a;
    t = mod((t - e * bk) / a, ak);
  }
  return eps;
}

BigInt prefix_numerator(const AdeleContext& ctx, const std::vector<Digit>& eps) {
  const BigInt a = ctx.base().a(), b = ctx.base().b();
  BigInt m = 0, bj = 1;
  for (Digit e : eps) {
    bj *= b;
    m = a * m + e * bj;
  }
  return m;
}

namespace {

// Visits every prefix of length r as (eps_1, m = a^r c), in lexicographic order of eps.
template <typename Visit>
void for_each_prefix(std::int64_t a, std::int64_t b, int r, Digit first_lo, Digit first_hi, Visit visit) {
  if (r == 0) {
    visit(Digit{0}, i128{0});
    return;
  }
  std::vector<i128> bpow(static_cast<std::size_t>(r) + 1, 1);
  for (int j = 1; j <= r; ++j) bpow[static_cast<std::size_t>(j)] = bpow[static_cast<std::size_t>(j - 1)] * b;
  std::vector<Digit> eps(static_cast<std::size_t>(r), 0);
  std::vector<i128> m(static_cast<std::size_t>(r) + 1, 0);
  eps[0] = first_lo;
  for (int j = 1; j <= r; ++j)
    m[static_cast<std::size_t>(j)] = a * m[static_cast<std::size_t>(j - 1)] + eps[static_cast<std::size_t>(j - 1)] * bpow[static_cast<std::size_t>(j)];
  while (true) {
    visit(eps[0], m[static_cast<std::size_t>(r)]);
    int j = r - 1;
    while (j >= 0) {
      Digit limit = j == 0 ? first_hi : static_cast<Digit>(a - 1);
      if (eps[static_cast<std::size_t>(j)] < limit) break;
      --j;
    }
    if (j < 0) return;
    ++eps[static_cast<std::size_t>(j)];
    for (int i = j + 1; i < r; ++i) eps[static_cast<std::size_t>(i)] = 0;
    for (int i = j + 1; i <= r; ++i)
      m[static_cast<std::size_t>(i)] = a * m[static_cast<std::size_t>(i - 1)] + eps[static_cast<std::size_t>(i - 1)] * bpow[static_cast<std::size_t>(i)];
  }
}

}  // namespace

LevelTable::LevelTable(const AdeleContext& ctx, int r) : ctx_(ctx), r_(r), size_(checked_level_size(ctx.base(), r)) {
  digit_.assign(static_cast<std::size_t>(size_), 0);
  numer_.assign(static_cast<std::size_t>(size_), 0);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(size_), 0);
  const std::int64_t a = ctx.base().a();
  for_each_prefix(a, ctx.base().b(), r, 0, static_cast<Digit>(a - 1), [&](Digit first, i128 m) {
    auto cls = static_cast<std::size_t>(mod(m, static_cast<i128>(size_)));
    if (seen[cls]) throw std::logic_error("digit prefixes are not a complete residue system");
    seen[cls] = 1;
    digit_[cls] = first;
    numer_[cls] = static_cast<std::int64_t>(m);
  });
}

TileApprox tile_approx(const AdeleContext& ctx, Digit d, int r) {
  const Base& base = ctx.base();
  if (r < 1) throw std::invalid_argument("tile_approx: r must be >= 1");
  if (d >= static_cast<std::uint64_t>(base.a())) throw std::invalid_argument("tile_approx: digit outside alphabet");
  checked_level_size(base, r - 1);
  TileApprox tile{d, r, {}};
  BigInt ar = pow(BigInt(base.a()), static_cast<unsigned>(r));
  for_each_prefix(base.a(), base.b(), r, d, d, [&](Digit, i128 m) { tile.corners.emplace_back(to_bigint(m), ar); });
  std::sort(tile.corners.begin(), tile.corners.end());
  return tile;
}

Rational box_measure(const AdeleContext& ctx, int r) {
  return Rational(1, pow(BigInt(ctx.base().a()), static_cast<unsigned>(r)));
}

ResidueCheck verify_residue_system(const AdeleContext& ctx, int r) {
  if (r < 1) throw std::invalid_argument("verify_residue_system: r must be >= 1");
  std::int64_t size = checked_level_size(ctx.base(), r);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(size), 0);
  ResidueCheck out;
  for_each_prefix(ctx.base().a(), ctx.base().b(), r, 0, static_cast<Digit>(ctx.base().a() - 1), [&](Digit, i128 m) {
    // Two prefix sums are congruent mod Z[alpha] iff their numerators agree mod a^r.
    auto cls = static_cast<std::size_t>(mod(m, static_cast<i128>(size)));
    if (!seen[cls]) {
      seen[cls] = 1;
      ++out.distinct;
    }
  });
  out.complete = out.distinct == size;
  return out;
}

BoxLocation locate(const AdeleContext& ctx, const AdelePoint& z, int r) {
  Rational ar = pow(ctx.alpha(), r);
  LatticeReduction red = reduce_mod_lattice(ctx, ar * z);
  BoxLocation loc;
  loc.corner = red.y / ar;
  loc.offset = red.residual.real;
  loc.cls = lattice_class(ctx, loc.corner, r);
  return loc;
}

namespace {

constexpr i128 kSafe = static_cast<i128>(1) << 100;

bool pow_i128(std::int64_t base, int e, i128& out) {
  out = 1;
  for (int i = 0; i < e; ++i) {
    out *= base;
    if (out > kSafe) return false;
  }
  return true;
}

}  // namespace

FastLocation locate_fast(const LevelTable& table, const BigInt& num, int e) {
  const AdeleContext& ctx = table.context();
  const Base& base = ctx.base();
  const int r = table.level();
  i128 br = 0, g = 0, n128 = 0;
  bool ok = fits_i128(num) && pow_i128(base.b(), r, br) && pow_i128(base.a(), std::abs(e - r), g);
  if (ok) {
    n128 = to_i128(num);
    ok = n128 < kSafe && n128 > -kSafe && br * g < kSafe;
  }
  FastLocation loc;
  if (ok) {
    if (r > e) {
      // a^r P = num a^{r-e} is an integer: the point is its own corner.
      loc.corner_num = n128 * g;
      loc.offset_num = 0;
      loc.offset_den = 1;
    } else {
      auto br64 = static_cast<std::int64_t>(br);
      i128 rho = mod(mod(n128, br) * modinv(static_cast<std::int64_t>(mod(g, br)), br64), br);
      i128 u = rho + br * floor_div(n128 - rho * g, br * g);
      loc.corner_num = u;
      loc.offset_num = n128 - u * g;
      loc.offset_den = br * g;
    }
    loc.cls = static_cast<std::int64_t>(mod(loc.corner_num, static_cast<i128>(table.size())));
    return loc;
  }
  Rational P(num, pow(BigInt(base.a()), static_cast<unsigned>(e)));
  BoxLocation slow = locate(ctx, AdelePoint::diagonal(ctx, P), r);
  Rational corner_num = slow.corner * pow(BigInt(base.a()), static_cast<unsigned>(r));
  if (denom(corner_num) != 1 || !fits_i128(numer(corner_num)) || !fits_i128(numer(slow.offset)) ||
      !fits_i128(denom(slow.offset)))
    throw std::overflow_error("locate_fast: point too large");
  loc.corner_num = to_i128(numer(corner_num));
  loc.offset_num = to_i128(numer(slow.offset));
  loc.offset_den = to_i128(denom(slow.offset));
  loc.cls = static_cast<std::int64_t>(slow.cls);
  return loc;
}

Rational membership_point(const AdeleContext& ctx, const BigInt& n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("membership_point: need n >= 1 and k >= 0");
  const Base& base = ctx.base();
  return Rational(n * pow(BigInt(base.b()), static_cast<unsigned>(k + 2)),
                  pow(BigInt(base.a()), static_cast<unsigned>(k + 1)));
}

Digit read_digit(const LevelTable& table, const TubeClasses& tube, const BigInt& n, int k) {
  const Base& base = table.context().base();
  if (tube.level() != table.level()) throw std::invalid_argument("read_digit: tube and table levels differ");
  BigInt num = n * pow(BigInt(base.b()), static_cast<unsigned>(k + 2));
  FastLocation loc = locate_fast(table, num, k + 1);
  bool ambiguous = tube.contains(loc.cls);
  if (!ambiguous && loc.offset_num == 0) {
    i128 left = loc.corner_num - static_cast<i128>(ipow(base.b(), static_cast<unsigned>(table.level())));
    ambiguous = tube.contains(static_cast<std::int64_t>(mod(left, static_cast<i128>(table.size()))));
  }
  if (ambiguous)
    throw BoundaryAmbiguous("point for n=" + n.str() + ", k=" + std::to_string(k) + " lies in a level-" +
                            std::to_string(table.level()) + " boundary-tube box");
  return table.digit_of_class(loc.cls);
}

DigitReading certify_digit(const AdeleContext& ctx, const BigInt& n, int k, int r_start, int r_tube_max,
                           int resolution_margin) {
  for (int r = std::max(1, r_start); r <= std::min(r_tube_max, k); ++r) {
    LevelTable table(ctx, r);
    TubeClasses tube = TubeClasses::for_level(table, r + resolution_margin);
    try {
      return DigitReading{read_digit(table, tube, n, k), r, true};
    } catch (const BoundaryAmbiguous&) {
    }
  }
  int r = k + 1;
  BoxLocation loc = locate(ctx, AdelePoint::diagonal(ctx, membership_point(ctx, n, k)), r);
  if (loc.offset != 0) throw std::logic_error("membership point is not a level-(k+1) corner");
  return DigitReading{class_prefix(ctx, loc.cls, r).front(), r, false};
}

}  // namespace ratbase
