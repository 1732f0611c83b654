#pragma once

#include <cstdint>

namespace ccc {

/// SplitMix64. Chosen over <random> engines because its output sequence is
/// fully pinned by this header, which keeps seeded runs byte-identical across
/// platforms and standard-library implementations.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound). Rejection keeps it exactly uniform.
  constexpr std::uint64_t below(std::uint64_t bound) {
    if (bound < 2) return 0;
    const std::uint64_t min = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= min) return r % bound;
    }
  }

  /// Derives an independent stream for item `index` of a seeded run, so work
  /// can be split per item without changing any draw.
  static constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (index * 0x517cc1b727220a95ULL + 0x2545f4914f6cdd1dULL));
    return g.next();
  }

private:
  std::uint64_t state_;
};

}  // namespace ccc
