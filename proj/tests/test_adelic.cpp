#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ratbase/numeration.hpp"
#include "ratbase/tiles.hpp"
#include "ratbase/verify.hpp"

using namespace ratbase;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  static const long long dens[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 18, 25, 27, 32, 45, 81, 96, 243, 1000, 1024, 3125};
  long long den = dens[rng() % std::size(dens)] * static_cast<long long>(1 + rng() % 13);
  long long num = static_cast<long long>(rng() % 200001) - 100000;
  return Rational(num, den);
}

bool p_integral(const Rational& q, std::int64_t p) { return denom(q) % p != 0; }

bool power_of(BigInt n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST_CASE("frac_p examples and contract") {
  CHECK(frac_p(2, Rational(1, 2)) == Rational(1, 2));
  CHECK(frac_p(2, Rational(3)) == 0);
  CHECK(frac_p(3, Rational(5, 9)) == Rational(5, 9));
  CHECK(frac_p(2, Rational(5, 12)) == Rational(3, 4));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    Rational x = random_rational(rng);
    for (std::int64_t p : {2, 3, 5}) {
      Rational f = frac_p(p, x);
      REQUIRE(f >= 0);
      REQUIRE(f < 1);
      REQUIRE(power_of(denom(f), p));
      REQUIRE(p_integral(x - f, p));
    }
  }
}

TEST_CASE("character kernel is Z[alpha]") {
  for (auto [a, b] : {std::pair{3, 2}, std::pair{7, 6}, std::pair{7, 4}}) {
    AdeleContext ctx(Base(a, b));
    std::mt19937_64 rng(2);
    int in = 0;
    for (int i = 0; i < 1000; ++i) {
      Rational xi = random_rational(rng);
      bool trivial = std::abs(char_tilde(ctx, xi) - 1.0) < 1e-12;
      REQUIRE(trivial == in_z_alpha(ctx, xi));
      in += trivial;
    }
    CHECK(in > 0);
    CHECK(in < 1000);
  }
  AdeleContext ctx(Base(3, 2));
  CHECK(char_tilde_phase(ctx, Rational(1, 2)) == 0);
  CHECK(char_tilde_phase(ctx, Rational(1, 3)) == Rational(2, 3));
  CHECK(character_phase(ctx, AdelePoint{Rational(1, 4), {Rational(0)}}) == Rational(3, 4));
}

TEST_CASE("character is additive") {
  AdeleContext ctx(Base(7, 6));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    Rational x = random_rational(rng), y = random_rational(rng);
    Rational lhs = char_tilde_phase(ctx, x + y);
    Rational rhs = char_tilde_phase(ctx, x) + char_tilde_phase(ctx, y);
    CHECK(denom(lhs - rhs) == 1);
  }
}

TEST_CASE("reduction lands in the fundamental box") {
  for (auto [a, b] : {std::pair{3, 2}, std::pair{7, 6}, std::pair{5, 3}}) {
    AdeleContext ctx(Base(a, b));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
      AdelePoint z{random_rational(rng), {}};
      for (std::size_t p = 0; p < ctx.primes().size(); ++p) z.padic.push_back(random_rational(rng));
      LatticeReduction red = reduce_mod_lattice(ctx, z);
      REQUIRE(in_z_alpha(ctx, red.y));
      REQUIRE(in_fundamental_box(ctx, red.residual));
      REQUIRE(z - AdelePoint::diagonal(ctx, red.y) - red.residual == AdelePoint{0, std::vector<Rational>(z.padic.size(), 0)});
    }
  }
}

TEST_CASE("residue systems are complete") {
  for (auto [a, b] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{7, 4}}) {
    AdeleContext ctx(Base(a, b));
    for (int r = 1; r <= 8; ++r) {
      ResidueCheck rc = verify_residue_system(ctx, r);
      CHECK(rc.complete);
      CHECK(rc.distinct == ipow(a, static_cast<unsigned>(r)));
    }
  }
}

TEST_CASE("prefix sums are pairwise incongruent (brute force)") {
  for (auto [a, b] : {std::pair{3, 2}, std::pair{5, 3}, std::pair{7, 6}}) {
    AdeleContext ctx(Base(a, b));
    const Rational alpha(a, b);
    for (int r = 1; r <= 3; ++r) {
      std::vector<Rational> pts;
      std::vector<Digit> eps(static_cast<std::size_t>(r), 0);
      while (true) {
        Rational c = 0;
        for (int k = 0; k < r; ++k) c += Rational(eps[static_cast<std::size_t>(k)]) * pow(alpha, -(k + 1));
        pts.push_back(c);
        int k = r - 1;
        while (k >= 0 && eps[static_cast<std::size_t>(k)] == static_cast<Digit>(a - 1)) eps[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++eps[static_cast<std::size_t>(k)];
      }
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) REQUIRE(!in_z_alpha(ctx, pts[i] - pts[j]));
    }
  }
}

TEST_CASE("lattice classes and prefixes agree") {
  AdeleContext ctx(Base(5, 3));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    int r = 1 + static_cast<int>(rng() % 5);
    std::vector<Digit> eps(static_cast<std::size_t>(r));
    for (auto& e : eps) e = static_cast<Digit>(rng() % 5);
    BigInt m = prefix_numerator(ctx, eps);
    Rational c(m, pow(BigInt(5), static_cast<unsigned>(r)));
    BigInt cls = lattice_class(ctx, c, r);
    CHECK(cls == mod(m, pow(BigInt(5), static_cast<unsigned>(r))));
    CHECK(class_prefix(ctx, cls, r) == eps);
    // Translating by an element of Z[alpha] keeps the class.
    CHECK(lattice_class(ctx, c + Rational(7, 27), r) == cls);
  }
  CHECK_THROWS_AS(lattice_class(ctx, Rational(1, 7), 2), std::invalid_argument);
}

TEST_CASE("tile approximations") {
  AdeleContext ctx(Base(3, 2));
  TileApprox t = tile_approx(ctx, 2, 1);
  REQUIRE(t.corners.size() == 1);
  CHECK(t.corners[0] == Rational(4, 3));
  TileApprox t3 = tile_approx(ctx, 1, 3);
  CHECK(t3.corners.size() == 9);
  CHECK(std::is_sorted(t3.corners.begin(), t3.corners.end()));
  CHECK(box_measure(ctx, 3) == Rational(1, 27));
  CHECK_THROWS_AS(tile_approx(ctx, 3, 2), std::invalid_argument);
}

TEST_CASE("fast point location agrees with exact location") {
  for (auto [a, b] : {std::pair{3, 2}, std::pair{7, 4}, std::pair{7, 6}}) {
    AdeleContext ctx(Base(a, b));
    std::mt19937_64 rng(6);
    for (int r = 1; r <= 4; ++r) {
      LevelTable table(ctx, r);
      for (int i = 0; i < 300; ++i) {
        int e = static_cast<int>(rng() % 7);
        BigInt num = BigInt(static_cast<long long>(rng() % 2000001) - 1000000);
        FastLocation fast = locate_fast(table, num, e);
        BoxLocation slow = locate(ctx, AdelePoint::diagonal(ctx, Rational(num, pow(BigInt(a), static_cast<unsigned>(e)))), r);
        REQUIRE(BigInt(fast.cls) == slow.cls);
        REQUIRE(Rational(to_bigint(fast.corner_num), pow(BigInt(a), static_cast<unsigned>(r))) == slow.corner);
        REQUIRE(Rational(to_bigint(fast.offset_num), to_bigint(fast.offset_den)) == slow.offset);
        REQUIRE(slow.offset >= 0);
        REQUIRE(slow.offset < 1);
      }
    }
  }
}

TEST_CASE("membership point") {
  AdeleContext ctx(Base(3, 2));
  CHECK(membership_point(ctx, 4, 1) == Rational(32, 9));
  CHECK(membership_point(ctx, 1, 0) == Rational(4, 3));
}

TEST_CASE("tiling cover with flagged faces") {
  for (auto [a, b, r] : {std::tuple{3, 2, 6}, std::tuple{5, 3, 4}, std::tuple{7, 6, 3}}) {
    CoverCheck cc = tiling_cover_check(AdeleContext(Base(a, b)), r, 3000, 9);
    CHECK(cc.failures == 0);
    CHECK(cc.flagged > 0);
    CHECK(cc.exactly_one + cc.flagged == cc.points);
  }
}

TEST_CASE("boundary tube stabilises under refinement") {
  AdeleContext ctx(Base(3, 2));
  for (Digit d = 0; d < 3; ++d) {
    BoundaryTube t8 = boundary_tube(ctx, d, 1, 8), t9 = boundary_tube(ctx, d, 1, 9);
    CHECK(t8.members == t9.members);
    CHECK(t8.count() > 0);
  }
  for (int r = 1; r <= 4; ++r)
    for (Digit d = 0; d < 3; ++d) {
      std::size_t prev = SIZE_MAX;
      std::vector<Rational> prev_members;
      for (int R = r + 1; R <= r + 7; ++R) {
        BoundaryTube t = boundary_tube(ctx, d, r, R);
        if (prev != SIZE_MAX)
          CHECK(std::includes(prev_members.begin(), prev_members.end(), t.members.begin(), t.members.end()));
        prev = t.count();
        prev_members = t.members;
      }
    }
}

TEST_CASE("boundary growth and pigeonhole cap") {
  AdeleContext ctx(Base(3, 2));
  std::vector<double> counts;
  for (int r = 1; r <= 6; ++r) {
    std::size_t total = 0;
    for (Digit d = 0; d < 3; ++d) total += boundary_tube(ctx, d, r, r + 8).count();
    counts.push_back(static_cast<double>(total));
  }
  CHECK(fit_growth_rate(counts) < 3.0);
  bool some_k = false;
  for (int k = 1; k <= 6; ++k)
    some_k = some_k || tile_boundary_tube(ctx, k, k + 8).period_count() <= static_cast<std::size_t>(ipow(3, k) - 1);
  CHECK(some_k);
}

TEST_CASE("tube-certified digits match the expansion") {
  AdeleContext ctx(Base(3, 2));
  LevelTable table(ctx, 4);
  TubeClasses tube = TubeClasses::for_level(table, 12);
  std::uint64_t read = 0;
  for (int n = 1; n <= 3000; ++n) {
    DigitWord w = encode(ctx.base(), n);
    for (int k = 4; k < static_cast<int>(w.size()); ++k) {
      Digit got = 0;
      try {
        got = read_digit(table, tube, n, k);
      } catch (const BoundaryAmbiguous&) {
        continue;
      }
      REQUIRE(got == w.at(static_cast<std::size_t>(k)));
      ++read;
    }
  }
  CHECK(read > 0);
  for (int n : {1, 2, 10, 577, 9999}) {
    DigitWord w = encode(ctx.base(), n);
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
      CHECK(certify_digit(ctx, n, k, 1, 6, 8).digit == w.at(static_cast<std::size_t>(k)));
  }
}

TEST_CASE("boundary hit counts") {
  AdeleContext ctx(Base(3, 2));
  std::vector<std::uint64_t> hits;
  for (int r = 1; r <= 3; ++r) {
    LevelTable table(ctx, r);
    TubeClasses tube = TubeClasses::for_level(table, r + 8);
    std::uint64_t F = count_boundary_hits(table, tube, 3, 10000);
    CHECK(F <= 10000);
    hits.push_back(F);
  }
  CHECK(hits[2] <= hits[1]);
  CHECK(hits[1] <= hits[0]);
}

TEST_CASE("fiber coordinate") {
  AdeleContext ctx(Base(3, 2));
  CHECK(fiber_coordinate(ctx, 0, 10) == 0);
  CHECK(fiber_coordinate(ctx, Rational(2, 3), 5) == Rational(1, 2));
  // 3 = 1 + 2 in Z_2: digits 1, 1, then zeros.
  CHECK(fiber_coordinate(ctx, 3, 8, FiberScheme::PadicDigits) == Rational(3, 4));
  CHECK_THROWS_AS(fiber_coordinate(ctx, Rational(1, 2), 4), NotIntegral);
  // Alpha-digits satisfy x = sum_{j<depth} d_j alpha^{-j} mod alpha^{-depth} prod Z_p.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    Rational x(static_cast<long long>(rng() % 100000) - 50000, static_cast<long long>(1 + 2 * (rng() % 50)));
    Rational f = fiber_coordinate(ctx, x, 10);
    // Recover the digits from the binary expansion of f.
    Rational partial = 0, rest = f;
    for (int j = 0; j < 10; ++j) {
      Rational w = pow(Rational(2), -j);
      Digit dj = rest >= w ? 1 : 0;
      rest -= w * dj;
      partial += Rational(dj) * pow(Rational(3, 2), -j);
    }
    CHECK(rest == 0);
    if (x != partial) CHECK(valuation(x - partial, 2) >= 10);
  }
  CHECK(parse_fiber_scheme("p-adic-digits") == FiberScheme::PadicDigits);
}

TEST_CASE("rendered rectangles") {
  AdeleContext ctx(Base(3, 2));
  auto r1 = render_tiles(ctx, 1, {0});
  CHECK(r1.size() == 3);
  CHECK(interiors_disjoint(r1));
  std::vector<Rational> xs;
  for (int i = -5; i <= 10; ++i) xs.push_back(Rational(i, 2));
  auto rects = render_tiles(ctx, 5, xs);
  CHECK(rects.size() == 16 * 243);
  CHECK(interiors_disjoint(rects));
  auto overlapping = rects;
  overlapping.push_back(rects[7]);
  CHECK(!interiors_disjoint(overlapping));
}
