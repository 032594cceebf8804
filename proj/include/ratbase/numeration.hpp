#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratbase/arith.hpp"
#include "ratbase/base.hpp"

namespace ratbase {

using Digit = std::uint32_t;

/// Base-a/b digit word, most significant digit first.
///
/// Invariants: every digit is below a, and the word is either empty (the
/// representation of 0) or starts with a nonzero digit.
class DigitWord {
 public:
  DigitWord(Base base, std::vector<Digit> digits_msf);

  const Base& base() const { return base_; }
  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  /// eps_k: k counts from the least significant end; 0 beyond the word.
  Digit at(std::size_t k) const { return k < digits_.size() ? digits_[digits_.size() - 1 - k] : 0; }

  friend bool operator==(const DigitWord& x, const DigitWord& y) {
    return x.base_ == y.base_ && x.digits_ == y.digits_;
  }

 private:
  Base base_;
  std::vector<Digit> digits_;
};

DigitWord encode(const Base& base, const BigInt& n);

/// Integer value of a word; throws NotInLanguage when (1/b) sum eps_k alpha^k is not integral.
BigInt decode(const DigitWord& word);

/// Exact value (1/b) sum eps_k alpha^k of any word over the alphabet, integral or not.
Rational evaluate(const Base& base, std::span<const Digit> digits_msf);

Digit digit(const Base& base, const BigInt& n, std::size_t k);
std::size_t length(const Base& base, const BigInt& n);
BigInt sum_of_digits(const Base& base, const BigInt& n);

/// Machine-integer kernel: writes the digits of n least significant first into
/// `out` and returns the length. Requires b*n < 2^64; `out` must hold
/// max_length_u64(base) entries.
inline std::size_t encode_lsf(std::uint64_t a, std::uint64_t b, std::uint64_t n, Digit* out) {
  std::size_t len = 0;
  while (n) {
    std::uint64_t x = b * n;
    std::uint64_t q = x / a;
    out[len++] = static_cast<Digit>(x - q * a);
    n = q;
  }
  return len;
}

/// Upper bound on the length of any n for which encode_lsf applies.
std::size_t max_length_u64(const Base& base);

/// Largest n handled by encode_lsf for this base.
std::uint64_t fast_path_limit(const Base& base);

/// Plain ASCII digits when a <= 10 ("21202"), otherwise "(12,0,7)".
std::string format_word(const DigitWord& word);
std::string format_digits(const Base& base, std::span<const Digit> digits_msf);

/// Inverse of format_word/format_digits. Does not check the leading-digit rule,
/// so it also serves for patterns; throws std::invalid_argument on bad syntax
/// or digits outside the alphabet.
std::vector<Digit> parse_digits(const Base& base, std::string_view text);
DigitWord parse_word(const Base& base, std::string_view text);

}  // namespace ratbase
