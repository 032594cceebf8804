#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratbase/adelic.hpp"

namespace ratbase {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;

  /// "name: PASS (detail)"
  std::string format() const;
};

struct CoverCheck {
  std::uint64_t points = 0;
  std::uint64_t exactly_one = 0;  // points inside exactly one tile box
  std::uint64_t flagged = 0;      // points on a box face (inside two boxes)
  std::uint64_t failures = 0;
};

/// Samples points of D_0 (random rational real part, random integers at each
/// p | b) and counts how many level-r boxes of the translates F_{d,r} + x contain each.
CoverCheck tiling_cover_check(const AdeleContext& ctx, int r, std::uint64_t samples, std::uint64_t seed);

/// exp of the least-squares slope of log(counts[i]) against i.
double fit_growth_rate(const std::vector<double>& counts);

struct VerifyOptions {
  int r = 6;
  int resolution_margin = 8;
  std::uint64_t N = 10000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Runs a named suite (tiling, numeration, fourier, boundary, digits, all).
/// Throws std::invalid_argument for an unknown name.
std::vector<CheckLine> run_suite(const AdeleContext& ctx, const std::string& suite, const VerifyOptions& opt);

}  // namespace ratbase
