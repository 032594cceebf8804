#include "ratbase/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace ratbase {

Pattern::Pattern(Base base, std::vector<Digit> digits_msf) : base_(std::move(base)), digits_(std::move(digits_msf)) {
  if (digits_.empty()) throw std::invalid_argument("pattern must be nonempty");
  for (Digit d : digits_)
    if (d >= static_cast<std::uint64_t>(base_.a()))
      throw std::invalid_argument("pattern digit " + std::to_string(d) + " outside alphabet");
}

std::uint64_t Pattern::code() const {
  std::uint64_t c = 0;
  for (Digit d : digits_) c = c * static_cast<std::uint64_t>(base_.a()) + d;
  return c;
}

namespace {

void require_fast(const Base& base, std::uint64_t N) {
  if (N > fast_path_limit(base)) throw std::invalid_argument("horizon too large for the counting kernels");
}

using Counts = std::vector<std::uint64_t>;

void add_into(Counts& acc, const Counts& part) {
  if (acc.size() < part.size()) acc.resize(part.size(), 0);
  for (std::size_t i = 0; i < part.size(); ++i) acc[i] += part[i];
}

bool matches_at(const Digit* lsf, std::size_t len, const Pattern& w, std::size_t k, bool padded) {
  if (!padded && len < k + w.size()) return false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    Digit got = k + j < len ? lsf[k + j] : 0;
    if (got != w.at(j)) return false;
  }
  return true;
}

}  // namespace

std::uint64_t count_pattern_at(const Pattern& w, std::size_t k, std::uint64_t N, bool padded) {
  const Base& base = w.base();
  require_fast(base, N);
  std::vector<Digit> buf(max_length_u64(base));
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    std::size_t len = encode_lsf(base.a(), base.b(), n, buf.data());
    if (matches_at(buf.data(), len, w, k, padded)) ++count;
  }
  return count;
}

PatternStats count_pattern(const Pattern& w, std::uint64_t N, unsigned threads) {
  const Base& base = w.base();
  if (N < 1) throw std::invalid_argument("count_pattern: N must be >= 1");
  require_fast(base, N);
  PatternStats stats;
  stats.N = N;
  std::size_t lN = length(base, N);
  if (lN < w.size()) return stats;
  std::size_t positions = lN - w.size() + 1;

  // Layout: [0, positions) plain counts, [positions, 2*positions) padded counts.
  Counts init(2 * positions, 0);
  Counts acc = detail::parallel_range(
      1, N, threads, init,
      [&](std::uint64_t lo, std::uint64_t hi, Counts& out) {
        std::vector<Digit> buf(max_length_u64(base));
        for (std::uint64_t n = lo; n <= hi; ++n) {
          std::size_t len = encode_lsf(base.a(), base.b(), n, buf.data());
          for (std::size_t k = 0; k < positions; ++k) {
            if (matches_at(buf.data(), len, w, k, true)) {
              ++out[positions + k];
              if (len >= k + w.size()) ++out[k];
            }
          }
        }
      },
      add_into);
  stats.per_position.assign(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(positions));
  stats.padded_per_position.assign(acc.begin() + static_cast<std::ptrdiff_t>(positions), acc.end());
  for (auto c : stats.per_position) stats.total += c;
  return stats;
}

std::uint64_t summatory_sod(const Base& base, std::uint64_t N, unsigned threads) {
  if (N < 1) throw std::invalid_argument("summatory_sod: N must be >= 1");
  require_fast(base, N);
  return detail::parallel_range(
      1, N, threads, std::uint64_t{0},
      [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& out) {
        std::vector<Digit> buf(max_length_u64(base));
        for (std::uint64_t n = lo; n <= hi; ++n) {
          std::size_t len = encode_lsf(base.a(), base.b(), n, buf.data());
          for (std::size_t i = 0; i < len; ++i) out += buf[i];
        }
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
}

std::vector<std::vector<std::uint64_t>> count_windows(const Base& base, std::size_t L,
                                                      const std::vector<std::uint64_t>& horizons,
                                                      unsigned threads) {
  if (L == 0) throw std::invalid_argument("count_windows: L must be >= 1");
  if (!std::is_sorted(horizons.begin(), horizons.end())) throw std::invalid_argument("horizons must ascend");
  std::int64_t codes = 0;
  if (!ipow_checked(base.a(), static_cast<unsigned>(L), max_enumeration(), codes))
    throw ScaleExceeded("a^L window codes exceed the enumeration cap");
  const std::uint64_t a = static_cast<std::uint64_t>(base.a());

  std::vector<std::vector<std::uint64_t>> out;
  Counts running(static_cast<std::size_t>(codes), 0);
  std::uint64_t done = 0;
  for (std::uint64_t N : horizons) {
    require_fast(base, N);
    Counts seg = detail::parallel_range(
        done + 1, N, threads, Counts(static_cast<std::size_t>(codes), 0),
        [&](std::uint64_t lo, std::uint64_t hi, Counts& cnt) {
          std::vector<Digit> buf(max_length_u64(base));
          for (std::uint64_t n = lo; n <= hi; ++n) {
            std::size_t len = encode_lsf(base.a(), base.b(), n, buf.data());
            for (std::size_t k = 0; k + L <= len; ++k) {
              std::uint64_t c = 0;
              for (std::size_t j = L; j-- > 0;) c = c * a + buf[k + j];
              ++cnt[c];
            }
          }
        },
        add_into);
    add_into(running, seg);
    done = std::max(done, N);
    out.push_back(running);
  }
  return out;
}

ChampernowneStream::ChampernowneStream(Base base) : base_(std::move(base)), buf_(max_length_u64(base_)) {}

Digit ChampernowneStream::next() {
  if (remaining_ == 0) {
    ++n_;
    if (n_ > fast_path_limit(base_)) throw std::overflow_error("Champernowne stream exhausted the fast path");
    remaining_ = encode_lsf(base_.a(), base_.b(), n_, buf_.data());
  }
  return buf_[--remaining_];
}

std::vector<Digit> champernowne_digits(const Base& base, std::uint64_t m) {
  ChampernowneStream s(base);
  std::vector<Digit> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(s.next());
  return out;
}

std::vector<std::vector<std::uint64_t>> champernowne_window_counts(const Base& base, std::size_t L,
                                                                   const std::vector<std::uint64_t>& horizons) {
  if (L == 0) throw std::invalid_argument("window length must be >= 1");
  if (!std::is_sorted(horizons.begin(), horizons.end())) throw std::invalid_argument("horizons must ascend");
  std::int64_t codes = 0;
  if (!ipow_checked(base.a(), static_cast<unsigned>(L), max_enumeration(), codes))
    throw ScaleExceeded("a^L window codes exceed the enumeration cap");
  const std::uint64_t a = static_cast<std::uint64_t>(base.a());
  const std::uint64_t modulus = static_cast<std::uint64_t>(codes);
  const std::uint64_t top = modulus / a;

  ChampernowneStream s(base);
  Counts cnt(static_cast<std::size_t>(codes), 0);
  std::vector<std::vector<std::uint64_t>> out;
  // The window starting at position n is complete once z_{n+L-1} is read; the
  // code keeps the first window digit as the most significant.
  std::uint64_t window = 0;
  for (std::size_t i = 1; i < L; ++i) window = window * a + s.next();
  std::uint64_t start = 0;
  for (std::uint64_t x : horizons) {
    while (start < x) {
      window = (window % top) * a + s.next();
      ++start;
      ++cnt[window];
    }
    out.push_back(cnt);
  }
  return out;
}

std::uint64_t champernowne_freq(const Pattern& w, std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("champernowne_freq: x must be >= 1");
  const Base& base = w.base();
  ChampernowneStream s(base);
  std::vector<Digit> window;
  window.reserve(w.size());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) window.push_back(s.next());
  std::uint64_t count = 0;
  std::size_t head = 0;  // ring buffer start
  window.resize(w.size());
  std::size_t filled = w.size() - 1;
  for (std::uint64_t n = 1; n <= x; ++n) {
    window[(head + filled) % w.size()] = s.next();
    bool hit = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (window[(head + i) % w.size()] != w.digits()[i]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
    head = (head + 1) % w.size();
  }
  return count;
}

double log_alpha(const Base& base, double x) {
  return std::log(x) / std::log(static_cast<double>(base.a()) / static_cast<double>(base.b()));
}

std::vector<AsymptoticRow> asymptotic_report(const Pattern& w, const std::vector<std::uint64_t>& horizons,
                                             unsigned threads) {
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    if (horizons[i] < 3) throw std::invalid_argument("asymptotic_report: horizons must be >= 3");
    if (i && horizons[i] <= horizons[i - 1]) throw std::invalid_argument("asymptotic_report: horizons must ascend");
  }
  const Base& base = w.base();
  auto windows = count_windows(base, w.size(), horizons, threads);
  std::vector<AsymptoticRow> rows;
  double scale = std::pow(static_cast<double>(base.a()), -static_cast<double>(w.size()));
  for (std::size_t i = 0; i < horizons.size(); ++i) {
    AsymptoticRow row;
    row.N = horizons[i];
    row.count = windows[i][w.code()];
    double N = static_cast<double>(row.N);
    row.main_term = N * scale * log_alpha(base, N);
    row.residual = static_cast<double>(row.count) - row.main_term;
    row.residual_norm = row.residual / (N * std::log(std::log(N)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ratbase
