#pragma once

#include <cstdint>

namespace kheight {

// Counter-based generator: output i of stream (seed, key) is a SplitMix64
// finalizer applied to a mix of seed, key and i, so any slot can be
// recomputed directly and streams split without coordination.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0, std::uint64_t key = 0) noexcept
      : seed_(seed), key_(key) {}

  std::uint64_t next() noexcept { return at(counter_++); }
  // Output slot i, independent of the current position.
  std::uint64_t at(std::uint64_t i) const noexcept {
    return mix(seed_ ^ mix(key_ + 0x632be59bd9b4e019ULL) ^ (i * 0x9e3779b97f4a7c15ULL));
  }

  // Uniform in [0, n), unbiased; n > 0.
  std::uint64_t below(std::uint64_t n) noexcept {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return double(next() >> 11) * 0x1.0p-53; }

  // An independent stream derived from this one.
  Rng split(std::uint64_t key) const noexcept {
    return Rng(mix(seed_ + 0x5851f42d4c957f2dULL * (key_ + 1)), key);
  }

  // Seed for the i-th independent run derived from a base seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t i) noexcept {
    return mix(seed ^ mix(i + 0x2545f4914f6cdd1dULL));
  }
  std::uint64_t counter() const noexcept { return counter_; }
  std::uint64_t seed() const noexcept { return seed_; }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace kheight
