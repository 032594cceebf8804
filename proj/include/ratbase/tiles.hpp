#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ratbase/adelic.hpp"
#include "ratbase/numeration.hpp"

namespace ratbase {

// Level-r boxes are Phi(y) + D_r with y in alpha^{-r} Z[alpha] = a^{-r} Z[1/b],
// D_r = [0, alpha^{-r}] x prod_p b^r Z_p. Modulo Z[alpha] there are a^r box
// classes; the class of y = u / (a^i B) (B a product of primes of b) is
// u a^{r-i} B^{-1} mod a^r. The a^r digit prefixes
// c = eps_1 alpha^{-1} + ... + eps_r alpha^{-r} hit every class exactly once,
// and the class of a prefix sum with numerator m = a^r c is m mod a^r.

/// Class of y in alpha^{-r} Z[alpha] / Z[alpha], as an integer in [0, a^r).
/// Throws std::invalid_argument if y is not a level-r corner.
BigInt lattice_class(const AdeleContext& ctx, const Rational& y, int r);

/// Digits eps_1..eps_r of the prefix sum in the given class.
std::vector<Digit> class_prefix(const AdeleContext& ctx, const BigInt& cls, int r);

/// a^r c for the prefix sum with digits eps_1..eps_r.
BigInt prefix_numerator(const AdeleContext& ctx, const std::vector<Digit>& eps);

/// Per-class lookup at a fixed level: leading digit and canonical corner
/// numerator m (corner m / a^r). Size a^r, capped by max_enumeration().
class LevelTable {
 public:
  LevelTable(const AdeleContext& ctx, int r);

  int level() const { return r_; }
  std::int64_t size() const { return size_; }
  Digit digit_of_class(std::int64_t cls) const { return digit_[static_cast<std::size_t>(cls)]; }
  std::int64_t canonical_numerator(std::int64_t cls) const { return numer_[static_cast<std::size_t>(cls)]; }

  const AdeleContext& context() const { return ctx_; }

 private:
  AdeleContext ctx_;
  int r_;
  std::int64_t size_;
  std::vector<Digit> digit_;
  std::vector<std::int64_t> numer_;
};

struct TileApprox {
  Digit digit = 0;
  int level = 0;
  std::vector<Rational> corners;  // ascending
};

/// F_{d,r}: the a^{r-1} corners d alpha^{-1} + sum_{k=2}^r eps_k alpha^{-k}.
TileApprox tile_approx(const AdeleContext& ctx, Digit d, int r);

/// mu_alpha of Phi(y) + D_r, i.e. a^{-r}.
Rational box_measure(const AdeleContext& ctx, int r);

struct ResidueCheck {
  bool complete = false;
  std::int64_t distinct = 0;
};

/// Checks that the a^r prefix sums are pairwise incongruent mod Z[alpha].
ResidueCheck verify_residue_system(const AdeleContext& ctx, int r);

/// Level-r box containing z under the half-open convention.
struct BoxLocation {
  Rational corner;  // y with z in Phi(y) + [0, alpha^{-r}) x prod_p b^r Z_p
  BigInt cls;       // class of y mod Z[alpha]
  Rational offset;  // (z_inf - y) alpha^r in [0, 1)
};

BoxLocation locate(const AdeleContext& ctx, const AdelePoint& z, int r);

/// Same as locate for the diagonal point num / a^e (p-integral), using
/// 128-bit arithmetic with a bignum fallback. offset = offset_num / offset_den.
struct FastLocation {
  std::int64_t cls = 0;
  i128 corner_num = 0;  // corner = corner_num / a^r
  i128 offset_num = 0;
  i128 offset_den = 1;
};

FastLocation locate_fast(const LevelTable& table, const BigInt& num, int e);

/// b n / alpha^{k+1} = b^{k+2} n / a^{k+1}.
Rational membership_point(const AdeleContext& ctx, const BigInt& n, int k);

/// Boundary tube B_{d,r}: level-r boxes meeting (F_d sym-diff F_{d,r}) or the
/// boundaries of F_d and F_{d,r}, decided at resolution r' > r.
///
/// F_d is never materialised. Each level-r' piece c + alpha^{-r'} F of F_d (and
/// of the neighbouring translates F_{d'} + x) is replaced by its hull
/// [c, c + M alpha^{-r'}] x (c + b^{r'} prod Z_p), M = (a-1) b / (a-b). Hulls
/// of children nest inside their parent's, so the member set is an
/// over-approximation that only shrinks as r' grows.
struct BoundaryTube {
  int digit = -1;  // -1 for the whole tile F (the set B'_r)
  int level = 0;
  int resolution = 0;
  std::vector<Rational> members;      // corners, ascending
  std::vector<std::int64_t> classes;  // distinct member classes mod Z[alpha], ascending

  std::size_t count() const { return members.size(); }
  std::size_t period_count() const { return classes.size(); }
};

BoundaryTube boundary_tube(const AdeleContext& ctx, Digit d, int r, int resolution);

/// B'_r for the whole tile F = union over d of F_d (labels are translates only).
BoundaryTube tile_boundary_tube(const AdeleContext& ctx, int r, int resolution);

/// Union over digits of B_{d,r} mod Z[alpha], as a per-class membership table.
class TubeClasses {
 public:
  TubeClasses(const LevelTable& table, const std::vector<BoundaryTube>& tubes);
  static TubeClasses for_level(const LevelTable& table, int resolution);

  int level() const { return r_; }
  bool contains(std::int64_t cls) const { return member_[static_cast<std::size_t>(cls)] != 0; }
  std::size_t count() const;

 private:
  int r_;
  std::vector<std::uint8_t> member_;
};

/// F_{k,r}: number of 1 <= n <= N whose point b n / alpha^{k+1} lies in a
/// closed tube box mod Z[alpha].
std::uint64_t count_boundary_hits(const LevelTable& table, const TubeClasses& tube, int k, std::uint64_t N);

struct DigitReading {
  Digit digit = 0;
  int level = 0;
  bool by_tube = false;  // certified by the boundary tube rather than by exact corner location
};

/// Digit read off from the box containing b n / alpha^{k+1}. Throws
/// BoundaryAmbiguous when that box (or, on a face, its left neighbour) is a tube box.
Digit read_digit(const LevelTable& table, const TubeClasses& tube, const BigInt& n, int k);

/// Escalates r from r_start to r_tube_max, then falls back to r = k+1 where the
/// point is itself a level-r corner and its class prefix spells eps_k .. eps_0.
DigitReading certify_digit(const AdeleContext& ctx, const BigInt& n, int k, int r_start, int r_tube_max,
                           int resolution_margin);

enum class FiberScheme { AlphaDigits, PadicDigits };

FiberScheme parse_fiber_scheme(const std::string& name);

/// Vertical coordinate for the p-adic part of x (x integral at every p | b).
/// AlphaDigits: x = sum_{j>=0} d_j alpha^{-j}, d_j in {0..b-1}, drawn as
/// sum d_j b^{-j}. PadicDigits: b-adic digits x = sum c_j b^j drawn as
/// sum c_j b^{-j-1}. Both truncated after `depth` digits.
Rational fiber_coordinate(const AdeleContext& ctx, const Rational& x, int depth,
                          FiberScheme scheme = FiberScheme::AlphaDigits);

struct TileRect {
  Rational translate;
  Digit digit = 0;
  Rational real_lo, real_hi;
  Rational fiber_lo, fiber_hi;
};

/// One rectangle per level-r box of Phi(x) + F_{d,r} for every translate and
/// digit, sorted by (translate, digit, corner).
std::vector<TileRect> render_tiles(const AdeleContext& ctx, int r, const std::vector<Rational>& translates,
                                   FiberScheme scheme = FiberScheme::AlphaDigits);

void write_tiles_csv(std::ostream& out, const std::vector<TileRect>& rects);
void write_tiles_svg(std::ostream& out, const AdeleContext& ctx, int r, const std::vector<TileRect>& rects);

/// True when no two rectangles share interior points.
bool interiors_disjoint(const std::vector<TileRect>& rects);

}  // namespace ratbase
