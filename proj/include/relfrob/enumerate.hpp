#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "relfrob/config.hpp"
#include "relfrob/errors.hpp"
#include "relfrob/rational.hpp"

namespace relfrob {

// Accumulator wide enough for any in-budget enumeration: with at most
// work_bound <= 2^63 leaves and per-leaf weights bounded by |X|^m (itself
// bounded through the budget), partial sums stay far below 2^127.
using BigAcc = unsigned __int128;

inline Integer to_integer(BigAcc v) {
  Integer hi(static_cast<std::uint64_t>(v >> 64));
  Integer lo(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

/// base^exp with overflow reported as WorkBoundExceeded (any overflowing
/// cost is far beyond every budget anyway).
inline std::uint64_t pow_checked(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw WorkBoundExceeded("enumeration cost overflows 64 bits");
    r *= base;
  }
  return r;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw WorkBoundExceeded("enumeration cost overflows 64 bits");
  return a * b;
}

inline void check_work(std::uint64_t cost, std::uint64_t bound) {
  if (cost > bound)
    throw WorkBoundExceeded("enumeration cost " + std::to_string(cost) +
                            " exceeds bound " + std::to_string(bound));
}

/// Splits [0, range) into contiguous chunks, evaluates `chunk` on each
/// (possibly on worker threads) and adds the results in chunk order.
/// Integer addition is associative, so the sum is identical for every
/// thread count.
template <typename ChunkFn>
Integer parallel_sum(std::uint32_t range, unsigned threads, ChunkFn chunk) {
  unsigned workers = threads == 0 ? 1 : threads;
  if (workers > range && range > 0) workers = range;
  if (workers <= 1 || range == 0) return to_integer(chunk(0, range));
  std::vector<BigAcc> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint32_t lo = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(range) * w / workers);
    std::uint32_t hi = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(range) * (w + 1) / workers);
    pool.emplace_back([&partial, w, lo, hi, &chunk] {
      partial[w] = chunk(lo, hi);
    });
  }
  for (auto& t : pool) t.join();
  BigAcc total = 0;
  for (BigAcc p : partial) total += p;
  return to_integer(total);
}

}  // namespace relfrob
