#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "ratbase/tiles.hpp"

namespace ratbase {

FiberScheme parse_fiber_scheme(const std::string& name) {
  if (name == "alpha-digits" || name == "alpha") return FiberScheme::AlphaDigits;
  if (name == "p-adic-digits" || name == "padic") return FiberScheme::PadicDigits;
  throw std::invalid_argument("unknown fiber scheme '" + name + "'");
}

namespace {

// Smallest s >= 0 with b^s x integral at every p | b.
int integral_shift(const AdeleContext& ctx, const Rational& x) {
  if (x == 0) return 0;
  int s = 0;
  for (const auto& [p, e] : ctx.primes()) {
    int v = valuation(x, p);
    if (v < 0) s = std::max(s, (-v + e - 1) / e);
  }
  return s;
}

// Truncated fiber value of a p-integral x, using `depth` digits.
Rational fiber_digits(const AdeleContext& ctx, const Rational& x, int depth, FiberScheme scheme) {
  const BigInt a = ctx.base().a(), b = ctx.base().b();
  if (b == 1) return 0;
  // x = n / m with m prime to b; every step keeps the denominator m.
  BigInt n = numer(x);
  const BigInt m = denom(x);
  const BigInt inv = modinv(mod(m, b), b);
  Rational out = 0, weight = scheme == FiberScheme::AlphaDigits ? Rational(1) : Rational(1, b);
  for (int j = 0; j < depth; ++j) {
    BigInt d = mod(n * inv, b);
    out += weight * Rational(d);
    n = (n - d * m) / b;
    if (scheme == FiberScheme::AlphaDigits) n *= a;
    weight /= b;
  }
  return out;
}

// Fiber value extended to points with bounded negative valuation:
// x = alpha^s y (or b^s y) with y integral maps to b^s fiber(y).
Rational fiber_extended(const AdeleContext& ctx, const Rational& x, int depth, FiberScheme scheme) {
  int s = integral_shift(ctx, x);
  if (s == 0) return fiber_digits(ctx, x, depth, scheme);
  Rational bs = pow(Rational(ctx.base().b()), s);
  Rational y = scheme == FiberScheme::AlphaDigits ? x / pow(ctx.alpha(), s) : x * bs;
  return bs * fiber_digits(ctx, y, depth + s, scheme);
}

}  // namespace

Rational fiber_coordinate(const AdeleContext& ctx, const Rational& x, int depth, FiberScheme scheme) {
  if (depth < 0) throw std::invalid_argument("fiber_coordinate: depth must be >= 0");
  if (integral_shift(ctx, x) > 0) throw NotIntegral(to_string(x) + " is not integral at every prime of b");
  return fiber_digits(ctx, x, depth, scheme);
}

std::vector<TileRect> render_tiles(const AdeleContext& ctx, int r, const std::vector<Rational>& translates,
                                   FiberScheme scheme) {
  if (r < 1) throw std::invalid_argument("render_tiles: r must be >= 1");
  const Base& base = ctx.base();
  std::int64_t per_tile = checked_level_size(base, r);
  std::vector<Rational> xs = translates;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (static_cast<double>(per_tile) * static_cast<double>(xs.size()) > static_cast<double>(max_enumeration()))
    throw ScaleExceeded("render_tiles: too many boxes");

  const Rational width = pow(ctx.alpha(), -r);
  const Rational b = base.b();
  const Rational height = base.b() == 1 ? Rational(1)
                          : scheme == FiberScheme::AlphaDigits ? pow(b, 1 - r)
                                                               : pow(b, -r);
  std::vector<TileApprox> tiles;
  for (std::int64_t d = 0; d < base.a(); ++d) tiles.push_back(tile_approx(ctx, static_cast<Digit>(d), r));

  std::vector<TileRect> rects;
  rects.reserve(static_cast<std::size_t>(per_tile) * xs.size());
  for (const auto& x : xs) {
    for (const auto& tile : tiles) {
      for (const auto& c : tile.corners) {
        TileRect rect;
        rect.translate = x;
        rect.digit = tile.digit;
        rect.real_lo = c + x;
        rect.real_hi = rect.real_lo + width;
        rect.fiber_lo = fiber_extended(ctx, rect.real_lo, r, scheme);
        rect.fiber_hi = rect.fiber_lo + height;
        rects.push_back(std::move(rect));
      }
    }
  }
  return rects;
}

void write_tiles_csv(std::ostream& out, const std::vector<TileRect>& rects) {
  out << "translate,digit,real_lo,real_hi,fiber_lo,fiber_hi\n";
  for (const auto& t : rects)
    out << to_string(t.translate) << ',' << t.digit << ',' << to_string(t.real_lo) << ',' << to_string(t.real_hi)
        << ',' << to_string(t.fiber_lo) << ',' << to_string(t.fiber_hi) << '\n';
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

void write_tiles_svg(std::ostream& out, const AdeleContext& ctx, int r, const std::vector<TileRect>& rects) {
  const double scale = 200.0;  // pixels per unit
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!rects.empty()) {
    x0 = y0 = 1e300;
    x1 = y1 = -1e300;
    for (const auto& t : rects) {
      x0 = std::min(x0, to_double(t.real_lo));
      x1 = std::max(x1, to_double(t.real_hi));
      y0 = std::min(y0, to_double(t.fiber_lo));
      y1 = std::max(y1, to_double(t.fiber_hi));
    }
  }
  const double w = (x1 - x0) * scale, h = (y1 - y0) * scale;
  const std::int64_t a = ctx.base().a();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w) << "\" height=\"" << fixed(h)
      << "\" viewBox=\"0 0 " << fixed(w) << ' ' << fixed(h) << "\">\n";
  out << "<title>tiles of base " << ctx.base().label() << " at level " << r << "</title>\n<style>\n";
  for (std::int64_t d = 0; d < a; ++d)
    out << ".d" << d << "{fill:hsl(" << (360 * d / a) << ",70%,55%)}\n";
  out << "</style>\n";
  if (!rects.empty()) {
    const std::string rw = fixed(to_double(rects.front().real_hi - rects.front().real_lo) * scale);
    const std::string rh = fixed(to_double(rects.front().fiber_hi - rects.front().fiber_lo) * scale);
    std::string open;
    for (std::size_t i = 0; i < rects.size(); ++i) {
      const auto& t = rects[i];
      std::string key = to_string(t.translate);
      if (i == 0 || t.translate != rects[i - 1].translate) {
        if (i) out << "</g>\n";
        out << "<g data-translate=\"" << key << "\">\n";
      }
      double x = (to_double(t.real_lo) - x0) * scale;
      double y = (y1 - to_double(t.fiber_hi)) * scale;
      out << "<rect class=\"d" << t.digit << "\" x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" width=\"" << rw
          << "\" height=\"" << rh << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

bool interiors_disjoint(const std::vector<TileRect>& rects) {
  if (rects.empty()) return true;
  const Rational h = rects.front().fiber_hi - rects.front().fiber_lo;
  bool grid = h > 0;
  for (const auto& t : rects)
    if (t.fiber_hi - t.fiber_lo != h || denom(t.fiber_lo / h) != 1) grid = false;
  auto overlap = [](const Rational& lo1, const Rational& hi1, const Rational& lo2, const Rational& hi2) {
    return lo1 < hi2 && lo2 < hi1;
  };
  if (!grid) {
    for (std::size_t i = 0; i < rects.size(); ++i)
      for (std::size_t j = i + 1; j < rects.size(); ++j)
        if (overlap(rects[i].real_lo, rects[i].real_hi, rects[j].real_lo, rects[j].real_hi) &&
            overlap(rects[i].fiber_lo, rects[i].fiber_hi, rects[j].fiber_lo, rects[j].fiber_hi))
          return false;
    return true;
  }
  // Aligned fiber cells of equal height overlap only when identical; within a
  // cell, sorted real intervals must not overlap their predecessor's running maximum.
  std::vector<const TileRect*> order;
  order.reserve(rects.size());
  for (const auto& t : rects) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const TileRect* p, const TileRect* q) {
    if (p->fiber_lo != q->fiber_lo) return p->fiber_lo < q->fiber_lo;
    return p->real_lo < q->real_lo;
  });
  Rational reach;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || order[i]->fiber_lo != order[i - 1]->fiber_lo) {
      reach = order[i]->real_hi;
      continue;
    }
    if (order[i]->real_lo < reach) return false;
    reach = std::max(reach, order[i]->real_hi);
  }
  return true;
}

}  // namespace ratbase
