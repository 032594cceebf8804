#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratbase/numeration.hpp"

using namespace ratbase;

namespace {

// Value (1/b) sum eps_k (a/b)^k of a most-significant-first word, from scratch.
Rational value_of(std::int64_t a, std::int64_t b, const std::vector<Digit>& msf) {
  Rational v = 0;
  for (Digit d : msf) v = v * Rational(a, b) + Rational(d, b);
  return v;
}

std::vector<Digit> digits_of(const std::string& s) {
  std::vector<Digit> out;
  for (char c : s) out.push_back(static_cast<Digit>(c - '0'));
  return out;
}

}  // namespace

TEST_CASE("first ten words in base 3/2") {
  Base base(3, 2);
  const char* words[] = {"2", "21", "210", "212", "2101", "2120", "2122", "21011", "21200", "21202"};
  for (int n = 1; n <= 10; ++n) {
    DigitWord w = encode(base, n);
    CHECK(format_word(w) == words[n - 1]);
    CHECK(decode(w) == n);
  }
}

TEST_CASE("encode and decode examples") {
  Base b32(3, 2);
  CHECK(encode(b32, 10).digits() == std::vector<Digit>{2, 1, 2, 0, 2});
  CHECK(encode(b32, 0).empty());
  CHECK(encode(Base(10, 1), 123).digits() == std::vector<Digit>{1, 2, 3});
  CHECK(decode(DigitWord(b32, {2, 1, 2})) == 4);
  CHECK(decode(DigitWord(b32, {})) == 0);
  CHECK_THROWS_AS(decode(DigitWord(b32, {1})), NotInLanguage);
  CHECK(evaluate(b32, std::vector<Digit>{1}) == Rational(1, 2));
}

TEST_CASE("digit, length and sum of digits examples") {
  Base b32(3, 2);
  CHECK(digit(b32, 10, 0) == 2);
  CHECK(digit(b32, 10, 7) == 0);
  CHECK(digit(b32, 7, 2) == 1);
  CHECK(length(b32, 10) == 5);
  CHECK(length(b32, 1) == 1);
  CHECK(sum_of_digits(b32, 8) == 5);
  CHECK(sum_of_digits(b32, 0) == 0);
  DigitWord w = encode(Base(5, 2), 7);
  BigInt s = 0;
  for (Digit d : w.digits()) s += d;
  CHECK(sum_of_digits(Base(5, 2), 7) == s);
}

TEST_CASE("invalid bases and words are rejected") {
  CHECK_THROWS_AS(Base(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(Base(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Base(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Base(3, 3), std::invalid_argument);
  Base b32(3, 2);
  CHECK_THROWS_AS(DigitWord(b32, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DigitWord(b32, {3}), std::invalid_argument);
  CHECK_THROWS_AS(encode(b32, -1), std::invalid_argument);
}

TEST_CASE("word formats round-trip") {
  Base b32(3, 2);
  CHECK(parse_word(b32, "21202").digits() == std::vector<Digit>{2, 1, 2, 0, 2});
  Base big(13, 5);
  DigitWord w(big, {12, 0, 7});
  CHECK(format_word(w) == "(12,0,7)");
  CHECK(parse_word(big, "(12,0,7)") == w);
  CHECK_THROWS_AS(parse_word(b32, "2x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(big, "(12,13)"), std::invalid_argument);
  for (int n = 0; n < 2000; ++n) {
    DigitWord e = encode(big, n);
    CHECK(parse_word(big, format_word(e)) == e);
  }
}

TEST_CASE("roundtrip, recurrence, congruence and length sandwich") {
  const std::pair<std::int64_t, std::int64_t> bases[] = {{3, 2}, {5, 2}, {5, 3}, {7, 4}, {10, 1}};
  for (auto [a, b] : bases) {
    Base base(a, b);
    const Rational alpha(a, b);
    for (std::int64_t n = 1; n <= 20000; ++n) {
      DigitWord w = encode(base, n);
      REQUIRE(!w.empty());
      REQUIRE(w.digits().front() != 0);
      // The word evaluates to n under an independent evaluator.
      REQUIRE(value_of(a, b, w.digits()) == n);
      // b n = eps_0 + a n_1, with n_1 encoded by the word minus its last digit.
      std::vector<Digit> head(w.digits().begin(), w.digits().end() - 1);
      BigInt n1 = head.empty() ? BigInt(0) : decode(DigitWord(base, head));
      REQUIRE(b * n == w.at(0) + a * n1);
      REQUIRE(encode(base, n1).digits() == head);
      if (a - b >= 2) {
        std::int64_t s = 0;
        for (Digit d : w.digits()) s += d;
        REQUIRE((s - b * n) % (a - b) == 0);
      }
      const int l = static_cast<int>(w.size());
      REQUIRE(Rational(1, b) * pow(alpha, l - 1) <= n);
      REQUIRE(Rational(n) <= Rational(a - 1, a - b) * (pow(alpha, l) - 1));
    }
  }
}

TEST_CASE("length at 10^6 respects the sandwich") {
  Base base(3, 2);
  const BigInt n = 1000000;
  const int l = static_cast<int>(length(base, n));
  CHECK(l == static_cast<int>(encode(base, n).size()));
  CHECK(Rational(1, 2) * pow(Rational(3, 2), l - 1) <= Rational(n));
  CHECK(Rational(n) <= Rational(2, 1) * (pow(Rational(3, 2), l) - 1));
}

TEST_CASE("big integers use the same digits as the machine path") {
  Base base(7, 4);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt n = BigInt(rng()) * BigInt(rng()) * BigInt(rng());
    DigitWord w = encode(base, n);
    CHECK(value_of(7, 4, w.digits()) == Rational(n));
    CHECK(decode(w) == n);
  }
  std::vector<Digit> buf(max_length_u64(base));
  for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{12345}, fast_path_limit(base)}) {
    std::size_t len = encode_lsf(7, 4, n, buf.data());
    DigitWord w = encode(base, BigInt(n));
    REQUIRE(len == w.size());
    for (std::size_t k = 0; k < len; ++k) CHECK(buf[k] == w.at(k));
  }
}

TEST_CASE("random words: decode agrees with exact evaluation") {
  Base base(5, 3);
  std::mt19937_64 rng(11);
  int accepted = 0;
  for (int i = 0; i < 5000; ++i) {
    std::vector<Digit> msf(1 + rng() % 8);
    for (auto& d : msf) d = static_cast<Digit>(rng() % 5);
    msf[0] = 1 + static_cast<Digit>(rng() % 4);
    Rational v = value_of(5, 3, msf);
    if (denom(v) == 1) {
      ++accepted;
      CHECK(decode(DigitWord(base, msf)) == numer(v));
    } else {
      CHECK_THROWS_AS(decode(DigitWord(base, msf)), NotInLanguage);
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("digit strings parse as patterns with leading zeros") {
  Base b32(3, 2);
  CHECK(parse_digits(b32, "012") == digits_of("012"));
}
