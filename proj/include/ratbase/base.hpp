#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratbase/arith.hpp"

namespace ratbase {

/// A digit word evaluates to a non-integer: it is not the representation of any integer.
struct NotInLanguage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration of a^r objects would exceed the configured cap.
struct ScaleExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point sits in a boundary-tube box; the digit cannot be read off at this level.
struct BoundaryAmbiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A p-adic coordinate has negative valuation where an integral one is required.
struct NotIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rational base a/b with digits {0, ..., a-1}.
///
/// Requires gcd(a, b) = 1 and a > b >= 1. `a` is kept below 2^31 so that the
/// machine-integer kernels can form products like b*n and a^r*x in 128 bits.
class Base {
 public:
  Base(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  Rational alpha() const { return Rational(a_, b_); }
  std::int64_t digit_count() const { return a_; }

  /// Primes dividing b with their exponents; empty when b = 1.
  const std::vector<std::pair<std::int64_t, int>>& primes_of_b() const { return primes_; }

  bool uses_plain_digits() const { return a_ <= 10; }

  std::string label() const { return std::to_string(a_) + "/" + std::to_string(b_); }

  friend bool operator==(const Base& x, const Base& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<std::pair<std::int64_t, int>> primes_;
};

/// Cap on a^r style enumerations; RATBASE_MAX_ENUM overrides the default of 10^7.
std::int64_t max_enumeration();

/// Throws ScaleExceeded if a^r exceeds the enumeration cap; returns a^r otherwise.
std::int64_t checked_level_size(const Base& base, int r);

}  // namespace ratbase
