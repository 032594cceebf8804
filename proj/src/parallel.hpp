#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ratbase::detail {

// Splits [lo, hi] into contiguous chunks, runs body(chunk_lo, chunk_hi, acc)
// per chunk, and folds the accumulators with merge. Results are independent of
// the thread count as long as merge is associative and commutative.
template <typename Acc, typename Body, typename Merge>
Acc parallel_range(std::uint64_t lo, std::uint64_t hi, unsigned threads, const Acc& init, Body body, Merge merge) {
  if (hi < lo) return init;
  std::uint64_t span = hi - lo + 1;
  unsigned t = std::max(1u, threads);
  if (t == 1 || span < 4096) {
    Acc acc = init;
    body(lo, hi, acc);
    return acc;
  }
  t = static_cast<unsigned>(std::min<std::uint64_t>(t, span));
  std::vector<Acc> parts(t, init);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned i = 0; i < t; ++i) {
    std::uint64_t a = lo + span * i / t;
    std::uint64_t b = lo + span * (i + 1) / t - 1;
    pool.emplace_back([&, a, b, i] { body(a, b, parts[i]); });
  }
  for (auto& th : pool) th.join();
  Acc acc = init;
  for (auto& p : parts) merge(acc, p);
  return acc;
}

}  // namespace ratbase::detail
