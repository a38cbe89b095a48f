#pragma once

#include "crossings/embedding.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace crossings {

/// splitmix64 (Steele/Lea/Vigna): used only to expand seeds into generator
/// state and to derive per-chunk substreams.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// xoshiro256** 1.0 (Blackman/Vigna), state seeded via splitmix64. The same
/// seed produces the same stream on every platform, which is what makes
/// seeded runs reproducible byte for byte.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  std::uint64_t operator()() { return next(); }

  /// Uniform draw from {0, ..., bound-1} via Lemire's multiply-shift with
  /// the exact rejection test, so every value is equally likely.
  std::uint64_t bounded(std::uint64_t bound);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_{};
};

/// Seed for chunk `index` of a run keyed by `seed`; chunks are statistically
/// independent substreams, so outputs do not depend on how chunks are
/// scheduled across workers.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Unbiased Fisher-Yates shuffle.
void fisher_yates(std::span<int> values, Xoshiro256StarStar& rng);

Permutation random_permutation(int n, Xoshiro256StarStar& rng);

/// Identity string recorded in report metadata.
std::string_view generator_identity();

}  // namespace crossings
