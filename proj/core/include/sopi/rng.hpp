#pragma once

#include <cstdint>

namespace sopi {

/// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter advanced by the
/// golden-ratio increment and passed through a fixed finalizer. Output is
/// identical on every platform, which keeps seeded runs reproducible.
///
/// Range reduction uses rejection sampling rather than
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  /// Independent substream for (seed, stream), e.g. one per Monte Carlo trial.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform in [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept { return lo + below(hi - lo + 1); }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept;

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

}  // namespace sopi
