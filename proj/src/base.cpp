#include "ratbase/base.hpp"

#include <cstdlib>
#include <numeric>

namespace ratbase {

Base::Base(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (b < 1) throw std::invalid_argument("base: b must be >= 1");
  if (a <= b) throw std::invalid_argument("base: a must exceed b");
  if (a >= (std::int64_t{1} << 31)) throw std::invalid_argument("base: a must be below 2^31");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("base: a and b must be coprime");
  primes_ = factorize(b);
}

std::int64_t max_enumeration() {
  static const std::int64_t cap = [] {
    if (const char* env = std::getenv("RATBASE_MAX_ENUM")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v >= 1) return static_cast<std::int64_t>(v);
    }
    return std::int64_t{10'000'000};
  }();
  return cap;
}

std::int64_t checked_level_size(const Base& base, int r) {
  std::int64_t out = 0;
  if (r < 0 || !ipow_checked(base.a(), static_cast<unsigned>(r), max_enumeration(), out))
    throw ScaleExceeded("a^r = " + std::to_string(base.a()) + "^" + std::to_string(r) +
                        " exceeds the enumeration cap of " + std::to_string(max_enumeration()));
  return out;
}

}  // namespace ratbase
