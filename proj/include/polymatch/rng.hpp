// Copyright 2026 The polymatch developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//      http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYMATCH_RNG_H
#define POLYMATCH_RNG_H

#include <cstdint>
#include <random>

namespace polymatch {

// All randomized components draw through Rng so that results are
// reproducible bit-for-bit across platforms and worker counts. The bounded
// draw is implemented here (rejection sampling) instead of
// std::uniform_int_distribution, whose output is implementation-defined.

enum class RngKind {
  kSplitMix64,  // default: tiny, seedable, well-studied mixer
  kMt19937_64,  // compatibility option (Mersenne Twister)
};

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed, RngKind kind = RngKind::kSplitMix64)
      : kind_(kind), sm_{seed}, mt_(seed) {}

  std::uint64_t next_u64() {
    return kind_ == RngKind::kSplitMix64 ? sm_.next() : mt_();
  }

  /// Uniform integer in [lo, hi], inclusive. Unbiased via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  RngKind kind_;
  SplitMix64 sm_;
  std::mt19937_64 mt_;
};

/// Deterministic per-subtask seed derivation (shots within a sweep, etc.).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 s{base + 0x9E3779B97F4A7C15ULL * (index + 1)};
  return s.next();
}

}  // namespace polymatch

#endif
