#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratbase/base.hpp"
#include "ratbase/numeration.hpp"

namespace ratbase {

/// Digit pattern w = (w_{l-1}, ..., w_0), stored most significant first.
/// Leading zeros are allowed.
class Pattern {
 public:
  Pattern(Base base, std::vector<Digit> digits_msf);

  const Base& base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }

  /// w_j, j counted from the least significant end.
  Digit at(std::size_t j) const { return digits_[digits_.size() - 1 - j]; }

  /// sum_j w_j a^j; matches the window codes produced by count_windows.
  std::uint64_t code() const;

 private:
  Base base_;
  std::vector<Digit> digits_;
};

struct PatternStats {
  std::uint64_t N = 0;
  /// S_{k,w}(N) for 0 <= k <= l(N) - |w|.
  std::vector<std::uint64_t> per_position;
  /// S'_{k,w}(N) over the same k range.
  std::vector<std::uint64_t> padded_per_position;
  std::uint64_t total = 0;
};

/// S_{k,w}(N), or S'_{k,w}(N) when padded (digits past l(n) read as 0).
std::uint64_t count_pattern_at(const Pattern& w, std::size_t k, std::uint64_t N, bool padded);

PatternStats count_pattern(const Pattern& w, std::uint64_t N, unsigned threads = 1);

/// sum_{n<=N} s_{a/b}(n).
std::uint64_t summatory_sod(const Base& base, std::uint64_t N, unsigned threads = 1);

/// Occurrence totals of every length-L word (indexed by Pattern::code) in the
/// representations of 1..N, for each horizon N. Horizons must be ascending.
std::vector<std::vector<std::uint64_t>> count_windows(const Base& base, std::size_t L,
                                                      const std::vector<std::uint64_t>& horizons,
                                                      unsigned threads = 1);

/// Digits of z_{a/b}: the base-a/b words of 1, 2, 3, ... concatenated. Single consumer.
class ChampernowneStream {
 public:
  explicit ChampernowneStream(Base base);

  Digit next();
  /// Index (from 1) of the integer whose word the next digit comes from.
  std::uint64_t current_integer() const { return n_; }

 private:
  Base base_;
  std::uint64_t n_ = 0;
  std::vector<Digit> buf_;  // least significant first
  std::size_t remaining_ = 0;
};

std::vector<Digit> champernowne_digits(const Base& base, std::uint64_t m);

/// gamma_w(x): start positions 1 <= n <= x where z_n ... z_{n+|w|-1} spells w
/// in reading order (most significant pattern digit first).
std::uint64_t champernowne_freq(const Pattern& w, std::uint64_t x);

/// gamma for every length-L word at each horizon x, indexed by Pattern::code.
std::vector<std::vector<std::uint64_t>> champernowne_window_counts(const Base& base, std::size_t L,
                                                                   const std::vector<std::uint64_t>& horizons);

struct AsymptoticRow {
  std::uint64_t N = 0;
  std::uint64_t count = 0;   // S_w(N)
  double main_term = 0;      // N a^{-|w|} log_alpha N
  double residual = 0;       // S_w(N) - main_term
  double residual_norm = 0;  // residual / (N log log N)
};

std::vector<AsymptoticRow> asymptotic_report(const Pattern& w, const std::vector<std::uint64_t>& horizons,
                                             unsigned threads = 1);

double log_alpha(const Base& base, double x);

}  // namespace ratbase
