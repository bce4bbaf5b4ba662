#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace herbst {

/// SplitMix64 (Steele, Lea, Flood 2014; reference constants from Vigna's
/// splitmix64.c). Seed 1234567 yields 6457827717110365317,
/// 3203168211198807973, 9817491932198370423, ...
///
/// Bounded draws use rejection on the low residue so the stream is identical
/// on every platform, unlike std::uniform_int_distribution.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
      std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("SplitMix64::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == max()) return static_cast<std::int64_t>((*this)());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span + 1));
  }

  /// Independent child stream (the state advanced once, mixed).
  SplitMix64 split() noexcept { return SplitMix64((*this)()); }

private:
  std::uint64_t state_;
};

} // namespace herbst
