#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ratbase/tiles.hpp"

namespace ratbase {

namespace {

constexpr i128 kLimit = static_cast<i128>(1) << 96;

// Real coordinates are scaled by S = a^R (a-b), which makes every level-j
// corner (j <= R), every box edge and every hull width M alpha^{-j} an integer.
class HullSearch {
 public:
  HullSearch(const Base& base, int r, int R) : a_(base.a()), b_(base.b()), r_(r), R_(R) {
    apow_.assign(static_cast<std::size_t>(R) + 1, 1);
    bpow_.assign(static_cast<std::size_t>(R) + 2, 1);
    for (int j = 1; j <= R; ++j) apow_[idx(j)] = apow_[idx(j - 1)] * a_;
    for (int j = 1; j <= R + 1; ++j) bpow_[idx(j)] = bpow_[idx(j - 1)] * b_;
    // The largest quantities are corner numerators times a^R and M a^R.
    if (apow_[idx(R)] > kLimit / (a_ * a_ * b_) || bpow_[idx(R + 1)] > kLimit / (a_ * a_))
      throw ScaleExceeded("boundary tube resolution too fine for 128-bit search");
    S_ = apow_[idx(R)] * (a_ - b_);
    br_ = bpow_[idx(r)];
    inv_a_.assign(static_cast<std::size_t>(R) + 1, 0);
    if (br_ > 1) {
      i128 inv = modinv(static_cast<std::int64_t>(a_ % br_), static_cast<std::int64_t>(br_));
      inv_a_[0] = 1;
      for (int j = 1; j <= R; ++j) inv_a_[idx(j)] = mod(inv_a_[idx(j - 1)] * inv, br_);
    }
  }

  i128 br() const { return br_; }
  i128 box_width() const { return bpow_[idx(r_)] * apow_[idx(R_ - r_)] * (a_ - b_); }

  // Ball residue mod b^r of u / a^r.
  i128 box_ball(i128 u) const { return br_ > 1 ? mod(mod(u, br_) * inv_a_[idx(r_)], br_) : 0; }

  // True if some level-R hull of a piece whose level-1 ancestor passes
  // `allowed(x, eps_1)` meets the closed box with corner u / a^r.
  template <typename Allowed>
  bool exists(i128 u, Allowed allowed) const {
    Box box{u * apow_[idx(R_ - r_)] * (a_ - b_), 0, box_ball(u)};
    box.hi = box.lo + box_width();
    i128 reach = (a_ - 1) * b_ * apow_[idx(R_)];  // M S
    i128 x_lo = floor_div(box.lo - reach, S_) - 1;
    i128 x_hi = floor_div(box.hi, S_) + 1;
    for (i128 x = x_lo; x <= x_hi; ++x)
      for (std::int64_t e = 0; e < a_; ++e)
        if (allowed(x, static_cast<Digit>(e)) && search(box, 1, e * b_, x)) return true;
    return false;
  }

 private:
  struct Box {
    i128 lo, hi, ball;
  };

  static std::size_t idx(int j) { return static_cast<std::size_t>(j); }

  bool search(const Box& box, int j, i128 m, i128 x) const {
    i128 lo = (m * apow_[idx(R_ - j)] + x * apow_[idx(R_)]) * (a_ - b_);
    i128 hi = lo + (a_ - 1) * bpow_[idx(j + 1)] * apow_[idx(R_ - j)];
    if (lo > box.hi || hi < box.lo) return false;
    int q = std::min(j + 1, r_);
    if (br_ > 1) {
      i128 bq = bpow_[idx(q)];
      i128 res = mod(mod(m, br_) * inv_a_[idx(j)] + x, br_);
      if (mod(res - box.ball, bq) != 0) return false;
    }
    if (j == R_) return true;
    // Hull inside the box: every descendant hull meets it too.
    if (q == r_ && lo >= box.lo && hi <= box.hi) return true;
    for (std::int64_t e = 0; e < a_; ++e)
      if (search(box, j + 1, a_ * m + e * bpow_[idx(j + 1)], x)) return true;
    return false;
  }

  std::int64_t a_, b_;
  int r_, R_;
  std::vector<i128> apow_, bpow_, inv_a_;
  i128 S_ = 0, br_ = 1;
};

struct Label {
  Digit digit;
  i128 translate;
};

template <typename IsSelf, typename Allowed>
BoundaryTube build_tube(const LevelTable& table, int digit, int resolution, i128 u_lo, i128 u_hi, IsSelf is_self,
                        Allowed allowed_other, Allowed allowed_self) {
  const Base& base = table.context().base();
  const int r = table.level();
  HullSearch hs(base, r, resolution);
  const i128 size = table.size();
  auto label = [&](i128 u) {
    auto cls = static_cast<std::int64_t>(mod(u, size));
    return Label{table.digit_of_class(cls), (u - table.canonical_numerator(cls)) / size};
  };
  BoundaryTube tube;
  tube.digit = digit;
  tube.level = r;
  tube.resolution = resolution;
  const i128 b = base.b();
  // Candidate corners lie in b Z_p for every p | b, i.e. u = 0 mod b.
  for (i128 u = u_lo + mod(-u_lo, b); u <= u_hi; u += b) {
    bool self = is_self(label(u));
    bool left = is_self(label(u - hs.br())), right = is_self(label(u + hs.br()));
    bool member = self ? (!left || !right || hs.exists(u, allowed_other)) : (left || right || hs.exists(u, allowed_self));
    if (!member) continue;
    tube.members.emplace_back(to_bigint(u), to_bigint(size));
    tube.classes.push_back(static_cast<std::int64_t>(mod(u, size)));
  }
  std::sort(tube.classes.begin(), tube.classes.end());
  tube.classes.erase(std::unique(tube.classes.begin(), tube.classes.end()), tube.classes.end());
  return tube;
}

void check_tube_args(int r, int resolution) {
  if (r < 1) throw std::invalid_argument("boundary tube: r must be >= 1");
  if (resolution <= r) throw std::invalid_argument("boundary tube: resolution must exceed r");
}

i128 ceil_div(i128 x, i128 m) { return -floor_div(-x, m); }

BoundaryTube digit_tube(const LevelTable& table, Digit d, int resolution) {
  const Base& base = table.context().base();
  const int r = table.level();
  const i128 a = base.a(), b = base.b();
  i128 ar1 = ipow(base.a(), static_cast<unsigned>(r - 1)), br = ipow(base.b(), static_cast<unsigned>(r));
  i128 start = static_cast<i128>(d) * b * ar1;
  i128 u_lo = start - 2 * br;
  i128 u_hi = start + ceil_div((a - 1) * b * b * ar1, a - b) + br;
  auto is_self = [d](const Label& l) { return l.digit == d && l.translate == 0; };
  std::function<bool(i128, Digit)> other = [d](i128 x, Digit e) { return x != 0 || e != d; };
  std::function<bool(i128, Digit)> self = [d](i128 x, Digit e) { return x == 0 && e == d; };
  return build_tube(table, static_cast<int>(d), resolution, u_lo, u_hi, is_self, other, self);
}

}  // namespace

BoundaryTube boundary_tube(const AdeleContext& ctx, Digit d, int r, int resolution) {
  check_tube_args(r, resolution);
  if (d >= static_cast<std::uint64_t>(ctx.base().a())) throw std::invalid_argument("boundary tube: digit outside alphabet");
  LevelTable table(ctx, r);
  return digit_tube(table, d, resolution);
}

BoundaryTube tile_boundary_tube(const AdeleContext& ctx, int r, int resolution) {
  check_tube_args(r, resolution);
  LevelTable table(ctx, r);
  const Base& base = ctx.base();
  const i128 a = base.a(), b = base.b();
  i128 ar = table.size(), br = ipow(base.b(), static_cast<unsigned>(r));
  i128 u_lo = -2 * br;
  i128 u_hi = ceil_div(ar * (a - 1) * b, a - b) + br;
  auto is_self = [](const Label& l) { return l.translate == 0; };
  std::function<bool(i128, Digit)> other = [](i128 x, Digit) { return x != 0; };
  std::function<bool(i128, Digit)> self = [](i128 x, Digit) { return x == 0; };
  return build_tube(table, -1, resolution, u_lo, u_hi, is_self, other, self);
}

TubeClasses::TubeClasses(const LevelTable& table, const std::vector<BoundaryTube>& tubes)
    : r_(table.level()), member_(static_cast<std::size_t>(table.size()), 0) {
  for (const auto& t : tubes) {
    if (t.level != r_) throw std::invalid_argument("tube level does not match table");
    for (auto c : t.classes) member_[static_cast<std::size_t>(c)] = 1;
  }
}

TubeClasses TubeClasses::for_level(const LevelTable& table, int resolution) {
  check_tube_args(table.level(), resolution);
  std::vector<BoundaryTube> tubes;
  for (std::int64_t d = 0; d < table.context().base().a(); ++d)
    tubes.push_back(digit_tube(table, static_cast<Digit>(d), resolution));
  return TubeClasses(table, tubes);
}

std::size_t TubeClasses::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), std::uint8_t{1}));
}

std::uint64_t count_boundary_hits(const LevelTable& table, const TubeClasses& tube, int k, std::uint64_t N) {
  if (tube.level() != table.level()) throw std::invalid_argument("count_boundary_hits: level mismatch");
  const Base& base = table.context().base();
  const BigInt bk = pow(BigInt(base.b()), static_cast<unsigned>(k + 2));
  const i128 br = ipow(base.b(), static_cast<unsigned>(table.level()));
  std::uint64_t hits = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    FastLocation loc = locate_fast(table, bk * n, k + 1);
    bool hit = tube.contains(loc.cls);
    if (!hit && loc.offset_num == 0)
      hit = tube.contains(static_cast<std::int64_t>(mod(loc.corner_num - br, static_cast<i128>(table.size()))));
    if (hit) ++hits;
  }
  return hits;
}

}  // namespace ratbase
