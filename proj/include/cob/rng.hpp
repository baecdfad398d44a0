#pragma once

#include <cstdint>

#include "cob/core.hpp"

namespace cob {

/// Identifier of the portable generator, embedded in suite reports so that
/// runs replicate across platforms and implementations.
inline constexpr const char* kRngAlgorithm = "splitmix64";

/// splitmix64: tiny, fully specified, platform independent. The standard
/// library distributions are avoided: their output is not pinned by the
/// standard.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), unbiased by rejection. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InternalError("SplitMix64::below(0)");
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform integer in the inclusive range [lo, hi].
  long long int_in(long long lo, long long hi) {
    if (lo > hi) throw InternalError("SplitMix64::int_in: empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<long long>(below(span));
  }

  bool coin() { return (next() & 1) != 0; }

  /// Derived stream for trial `index` of a seeded batch.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ index);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cob
