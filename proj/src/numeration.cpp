#include "ratbase/numeration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ratbase {

DigitWord::DigitWord(Base base, std::vector<Digit> digits_msf)
    : base_(std::move(base)), digits_(std::move(digits_msf)) {
  for (Digit d : digits_)
    if (d >= static_cast<std::uint64_t>(base_.a()))
      throw std::invalid_argument("digit " + std::to_string(d) + " outside alphabet of base " +
                                  base_.label());
  if (!digits_.empty() && digits_.front() == 0)
    throw std::invalid_argument("digit word has a leading zero");
}

std::uint64_t fast_path_limit(const Base& base) {
  return std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base.b());
}

std::size_t max_length_u64(const Base& base) {
  // n_{k+1} <= b n_k / a, so the length is at most log_alpha(limit) + 2.
  double alpha = static_cast<double>(base.a()) / static_cast<double>(base.b());
  return static_cast<std::size_t>(64.0 * std::log(2.0) / std::log(alpha)) + 3;
}

namespace {

// Digits least significant first.
std::vector<Digit> encode_lsf_big(const Base& base, BigInt n) {
  if (n < 0) throw std::invalid_argument("encode: negative integer");
  std::vector<Digit> out;
  const BigInt a = base.a(), b = base.b();
  const BigInt limit = fast_path_limit(base);
  while (n > limit) {
    BigInt x = b * n;
    BigInt q = x / a;
    out.push_back(static_cast<Digit>(x - q * a));
    n = q;
  }
  auto small = n.convert_to<std::uint64_t>();
  std::vector<Digit> tail(max_length_u64(base));
  std::size_t len = encode_lsf(base.a(), base.b(), small, tail.data());
  out.insert(out.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(len));
  return out;
}

}  // namespace

DigitWord encode(const Base& base, const BigInt& n) {
  auto lsf = encode_lsf_big(base, n);
  std::reverse(lsf.begin(), lsf.end());
  return DigitWord(base, std::move(lsf));
}

BigInt decode(const DigitWord& word) {
  // Horner from the top: b n_k = eps_k + a n_{k+1}. A non-integral step stays
  // non-integral (its b-power denominator only grows), so each must divide.
  const BigInt a = word.base().a(), b = word.base().b();
  BigInt n = 0;
  for (Digit d : word.digits()) {
    BigInt x = a * n + d;
    if (x % b != 0)
      throw NotInLanguage("digit word " + format_word(word) + " is not the representation of an integer");
    n = x / b;
  }
  return n;
}

Rational evaluate(const Base& base, std::span<const Digit> digits_msf) {
  Rational alpha = base.alpha();
  Rational acc = 0;
  for (Digit d : digits_msf) acc = acc * alpha + d;
  return acc / base.b();
}

Digit digit(const Base& base, const BigInt& n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("digit: n must be positive");
  auto lsf = encode_lsf_big(base, n);
  return k < lsf.size() ? lsf[k] : 0;
}

std::size_t length(const Base& base, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("length: n must be positive");
  return encode_lsf_big(base, n).size();
}

BigInt sum_of_digits(const Base& base, const BigInt& n) {
  BigInt s = 0;
  for (Digit d : encode_lsf_big(base, n)) s += d;
  return s;
}

std::string format_digits(const Base& base, std::span<const Digit> digits_msf) {
  std::string out;
  if (base.uses_plain_digits()) {
    for (Digit d : digits_msf) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < digits_msf.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits_msf[i]);
  }
  out.push_back(')');
  return out;
}

std::string format_word(const DigitWord& word) { return format_digits(word.base(), word.digits()); }

std::vector<Digit> parse_digits(const Base& base, std::string_view text) {
  std::vector<Digit> out;
  auto check = [&](std::uint64_t d) {
    if (d >= static_cast<std::uint64_t>(base.a()))
      throw std::invalid_argument("digit " + std::to_string(d) + " outside alphabet of base " + base.label());
    out.push_back(static_cast<Digit>(d));
  };
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unterminated digit list");
    std::string_view body = text.substr(1, text.size() - 2);
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
        throw std::invalid_argument("bad digit '" + std::string(item) + "'");
      check(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  if (!base.uses_plain_digits())
    throw std::invalid_argument("base " + base.label() + " needs the (d,d,...) digit syntax");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad digit character '") + c + "'");
    check(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

DigitWord parse_word(const Base& base, std::string_view text) { return DigitWord(base, parse_digits(base, text)); }

}  // namespace ratbase
