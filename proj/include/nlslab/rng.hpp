#pragma once

#include <cmath>
#include <cstdint>

namespace nlslab {

// splitmix64: the fixed seed-expansion rule.  A parent seed spawns child
// stream k as substream(seed, k); each stream then advances by next().
// The rule (one mixing step of the parent, offset by k times the golden
// ratio) is documented in the README so parallel trials are reproducible.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (deterministic, libc-independent).
  double gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
};

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 parent(seed);
  const std::uint64_t root = parent.next();
  return SplitMix64(root + index * 0x9E3779B97F4A7C15ull);
}

}  // namespace nlslab
