#pragma once

#include <cstdint>
#include <random>

namespace dpsynth {

/// Deterministic random stream. The same seed yields a bit-identical draw
/// sequence on every platform: the engine is std::mt19937_64 (fully specified
/// by the standard) and uniform doubles are derived by explicit bit
/// manipulation rather than through distribution objects, whose output is
/// implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1), 53 random mantissa bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_below(std::uint64_t n) { return engine_() % n; }

  /// Independent stream keyed by (seed, salt). Uses a SplitMix64-style mix so
  /// nearby salts land far apart in seed space.
  SeededRng derive(std::uint64_t salt) const {
    std::uint64_t z = seed_ ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return SeededRng(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace dpsynth
