#include "ratbase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ratbase/fourier.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/patterns.hpp"
#include "ratbase/report.hpp"
#include "ratbase/tiles.hpp"

namespace ratbase {

std::string CheckLine::format() const {
  return name + ": " + (pass ? "PASS" : "FAIL") + (detail.empty() ? "" : " (" + detail + ")");
}

CoverCheck tiling_cover_check(const AdeleContext& ctx, int r, std::uint64_t samples, std::uint64_t seed) {
  const Base& base = ctx.base();
  LevelTable table(ctx, r);
  const i128 ar = table.size();
  const i128 br = ipow(base.b(), static_cast<unsigned>(r));
  // F lies in [0, M] with M = (a-1) b / (a-b); translates beyond this range cannot reach [0, 1].
  const i128 x_lo = -((base.a() - 1) * base.b() / (base.a() - base.b())) - 2;
  std::vector<i128> corners;  // a^r times the real corner of each box
  for (i128 x = x_lo; x <= 1; ++x)
    for (std::int64_t cls = 0; cls < table.size(); ++cls) corners.push_back(table.canonical_numerator(cls) + x * ar);
  std::sort(corners.begin(), corners.end());

  struct Place {
    BigInt modulus, inv_ar;
  };
  std::vector<Place> places;
  for (const auto& [p, e] : ctx.primes()) {
    BigInt mdl = pow(BigInt(p), static_cast<unsigned>(e * r));
    places.push_back({mdl, modinv(mod(to_bigint(ar), mdl), mdl)});
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t Q = 7 * static_cast<std::uint64_t>(ar) * 1009;
  CoverCheck out;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Rational real(static_cast<long long>(rng() % Q), static_cast<long long>(Q));
    std::vector<BigInt> padic;
    for (const auto& pl : places) padic.push_back(BigInt(rng() % 1000000007ULL) % (pl.modulus * 7));
    if (s % 10 == 9) {
      // Put every tenth point on the left face of a box in its own ball.
      auto t = static_cast<i128>(rng() % 1000000007ULL);
      for (auto& c : padic) c = to_bigint(t);
      i128 u0 = mod(ar * t, br);
      i128 u = u0 + br * static_cast<i128>(rng() % static_cast<std::uint64_t>((ar - 1 - u0) / br + 1));
      real = Rational(to_bigint(u), to_bigint(ar));
    }
    Rational za = real * to_bigint(ar);
    // Candidates: u <= z a^r <= u + b^r.
    auto first = std::lower_bound(corners.begin(), corners.end(), to_i128(floor(za - to_bigint(br))));
    std::uint64_t inside = 0;
    bool face = false;
    for (auto it = first; it != corners.end() && Rational(to_bigint(*it)) <= za; ++it) {
      Rational off = za - to_bigint(*it);
      if (off < 0 || off > to_bigint(br)) continue;
      bool ball = true;
      for (std::size_t i = 0; i < places.size() && ball; ++i)
        ball = mod(padic[i] - to_bigint(*it) * places[i].inv_ar, places[i].modulus) == 0;
      if (!ball) continue;
      ++inside;
      if (off == 0 || off == to_bigint(br)) face = true;
    }
    ++out.points;
    if (face) {
      ++out.flagged;
      if (inside != 2) ++out.failures;
    } else if (inside == 1) {
      ++out.exactly_one;
    } else {
      ++out.failures;
    }
  }
  return out;
}

double fit_growth_rate(const std::vector<double>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("fit_growth_rate: need at least two counts");
  double n = static_cast<double>(counts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double x = static_cast<double>(i), y = std::log(counts[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return std::exp((n * sxy - sx * sy) / (n * sxx - sx * sx));
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void tiling_suite(const AdeleContext& ctx, const VerifyOptions& opt, std::vector<CheckLine>& out) {
  ResidueCheck rc = verify_residue_system(ctx, opt.r);
  out.push_back({"residue_system r=" + std::to_string(opt.r), rc.complete, str(static_cast<std::uint64_t>(rc.distinct)) + " distinct"});
  CoverCheck cc = tiling_cover_check(ctx, opt.r, opt.samples, opt.seed);
  out.push_back({"tiling_cover r=" + std::to_string(opt.r), cc.failures == 0,
                 str(cc.points) + " points, " + str(cc.flagged) + " on faces, " + str(cc.failures) + " failures"});
}

void numeration_suite(const AdeleContext& ctx, const VerifyOptions& opt, std::vector<CheckLine>& out) {
  const Base& base = ctx.base();
  std::uint64_t bad_roundtrip = 0, bad_congruence = 0;
  const std::int64_t m = base.a() - base.b();
  std::vector<Digit> buf(max_length_u64(base));
  for (std::uint64_t n = 1; n <= opt.N; ++n) {
    std::size_t len = encode_lsf(base.a(), base.b(), n, buf.data());
    std::vector<Digit> msf(buf.rbegin() + static_cast<std::ptrdiff_t>(buf.size() - len), buf.rend());
    if (decode(DigitWord(base, msf)) != n) ++bad_roundtrip;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < len; ++i) s += buf[i];
    if (mod(static_cast<i128>(s) - static_cast<i128>(base.b()) * n, static_cast<i128>(m)) != 0) ++bad_congruence;
  }
  out.push_back({"roundtrip N=" + str(opt.N), bad_roundtrip == 0, str(bad_roundtrip) + " failures"});
  out.push_back({"digit_sum_congruence N=" + str(opt.N), bad_congruence == 0, str(bad_congruence) + " failures"});
}

void fourier_suite(const AdeleContext& ctx, const VerifyOptions& opt, std::vector<CheckLine>& out) {
  const Base& base = ctx.base();
  const int rmax = std::min(opt.r, 4);
  bool zero_ok = true;
  for (int r = 1; r <= rmax; ++r)
    for (std::int64_t d = 0; d < base.a(); ++d)
      if (coeff_f(ctx, static_cast<Digit>(d), r, 0) != std::complex<double>(1.0 / static_cast<double>(base.a())))
        zero_ok = false;
  out.push_back({"coeff_f_at_zero r<=" + std::to_string(rmax), zero_ok, "1/" + std::to_string(base.a())});
  std::uint64_t checked = 0, bad = 0;
  double worst = 0;
  for (int r = 1; r <= rmax; ++r) {
    BigInt br = pow(BigInt(base.b()), static_cast<unsigned>(r));
    for (std::int64_t j = -1000; j <= 1000; ++j) {
      if (j == 0 || j % base.a() != 0) continue;
      for (std::int64_t d = 0; d < base.a(); ++d) {
        double v = std::abs(coeff_f(ctx, static_cast<Digit>(d), r, Rational(j, br)));
        worst = std::max(worst, v);
        ++checked;
        if (v > 1e-12) ++bad;
      }
    }
  }
  out.push_back({"coeff_f_vanishing r<=" + std::to_string(rmax), bad == 0,
                 str(checked) + " frequencies, max " + format_double(worst)});
}

void boundary_suite(const AdeleContext& ctx, const VerifyOptions& opt, std::vector<CheckLine>& out) {
  const Base& base = ctx.base();
  const int rmax = std::max(2, std::min(opt.r, 6));
  bool shrinks = true;
  std::uint64_t compared = 0;
  for (int r = 1; r <= std::min(rmax, 4); ++r)
    for (std::int64_t d = 0; d < base.a(); ++d) {
      BoundaryTube lo = boundary_tube(ctx, static_cast<Digit>(d), r, r + opt.resolution_margin);
      BoundaryTube hi = boundary_tube(ctx, static_cast<Digit>(d), r, r + opt.resolution_margin + 1);
      shrinks = shrinks && std::includes(lo.members.begin(), lo.members.end(), hi.members.begin(), hi.members.end());
      ++compared;
    }
  out.push_back({"boundary_stabilization", shrinks, str(compared) + " tubes compared"});
  std::vector<double> counts;
  for (int r = 1; r <= rmax; ++r) {
    std::size_t total = 0;
    for (std::int64_t d = 0; d < base.a(); ++d)
      total += boundary_tube(ctx, static_cast<Digit>(d), r, r + opt.resolution_margin).count();
    counts.push_back(static_cast<double>(total));
  }
  double rho = fit_growth_rate(counts);
  out.push_back({"boundary_growth r=1.." + std::to_string(rmax), rho < static_cast<double>(base.a()),
                 "rho=" + format_double(rho)});
}

void digits_suite(const AdeleContext& ctx, const VerifyOptions& opt, std::vector<CheckLine>& out) {
  const Base& base = ctx.base();
  const int rmax = std::min(opt.r, 8);
  std::vector<LevelTable> tables;
  std::vector<TubeClasses> tubes;
  for (int r = 1; r <= rmax; ++r) {
    tables.emplace_back(ctx, r);
    tubes.push_back(TubeClasses::for_level(tables.back(), r + opt.resolution_margin));
  }
  std::uint64_t by_tube = 0, exact = 0, bad = 0;
  for (std::uint64_t n = 1; n <= opt.N; ++n) {
    DigitWord w = encode(base, BigInt(n));
    for (std::size_t k = 0; k < w.size(); ++k) {
      Digit got = 0;
      bool done = false;
      for (int r = 1; r <= std::min<int>(rmax, static_cast<int>(k)) && !done; ++r) {
        try {
          got = read_digit(tables[static_cast<std::size_t>(r - 1)], tubes[static_cast<std::size_t>(r - 1)], BigInt(n),
                           static_cast<int>(k));
          done = true;
          ++by_tube;
        } catch (const BoundaryAmbiguous&) {
        }
      }
      if (!done) {
        got = certify_digit(ctx, BigInt(n), static_cast<int>(k), 1, 0, opt.resolution_margin).digit;
        ++exact;
      }
      if (got != w.at(k)) ++bad;
    }
  }
  out.push_back({"digit_criterion N=" + str(opt.N), bad == 0,
                 str(by_tube) + " by tube, " + str(exact) + " exact, " + str(bad) + " mismatches"});
}

}  // namespace

std::vector<CheckLine> run_suite(const AdeleContext& ctx, const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckLine> out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "numeration") known = true, numeration_suite(ctx, opt, out);
  if (all || suite == "tiling") known = true, tiling_suite(ctx, opt, out);
  if (all || suite == "fourier") known = true, fourier_suite(ctx, opt, out);
  if (all || suite == "boundary") known = true, boundary_suite(ctx, opt, out);
  if (all || suite == "digits") known = true, digits_suite(ctx, opt, out);
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace ratbase
