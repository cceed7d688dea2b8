#pragma once

#include <cstdint>

namespace relfrob {

// Runtime limits shared by the enumeration kernels and group builders.
// Exceeding a bound raises WorkBoundExceeded / TooLarge; nothing is ever
// silently truncated.
struct Config {
  // Iteration budget for brute-force enumerators (loops over G^d).
  std::uint64_t work_bound = 1'000'000'000;
  // Budget for the tuple-level cross-check enumerator, measured as
  // |G|^(m+2k) * |X|^m.
  std::uint64_t tuple_work_bound = 10'000'000;
  // Budget for validating fast aggregated routes against literal loops.
  std::uint64_t direct_check_bound = 10'000'000;
  // Maximum group order for Cayley-table construction.
  std::uint64_t group_size_cap = 20'000;
  // Worker count for partitionable loops; results are identical for any
  // value.
  unsigned threads = 1;
};

}  // namespace relfrob
