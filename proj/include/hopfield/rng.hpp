#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hopfield {

// Reproducibility contract (see README, "Reproducibility"):
//   * core generator: std::mt19937_64, fully specified by the C++ standard,
//     seeded with a single 64-bit value;
//   * derived seeds: SplitMix64 finalizer, mix_seed(seed, index);
//   * normal variates: basic-form Box-Muller over 53-bit uniforms.
// Streams are bitwise reproducible within one build of this library.

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Avalanche mix of a base seed and a stream index. Used to derive
/// independent per-trial and per-restart seeds from one user seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + index * 0x9e3779b97f4a7c15ULL);
}

/// Seeded random source for instance sampling and search restarts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log argument.
  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal via basic-form Box-Muller; generates pairs, caches one.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Uniform sign in {-1, +1} from the top bit of the next word.
  int sign() { return (engine_() >> 63) ? -1 : 1; }

  /// Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace hopfield
