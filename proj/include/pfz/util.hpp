// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstdint>
#include <functional>

namespace pfz {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// splitmix64: tiny seedable generator with well-mixed output.  Used both as
// the shot-sampling RNG and to derive independent per-point seeds, so results
// are reproducible across platforms (unlike distribution objects in <random>,
// whose output is implementation-defined).
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

// Deterministic seed for job `index` within a run seeded by `base`; mixing
// keeps streams independent regardless of how jobs are scheduled.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  Rng r(base ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return r.next_u64();
}

// Worker count: explicit request > PFZ_THREADS env > 1.
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, n).  Each index is computed exactly once and may be
// assigned to any worker; callers must write results into per-index slots so
// output is independent of scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int n_threads = 0);

}  // namespace pfz
