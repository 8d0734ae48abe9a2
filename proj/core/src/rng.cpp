#include "sopi/rng.hpp"

namespace sopi {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
  return Rng(mix64(seed) ^ mix64(stream * kGamma + 0x632BE59BD9B4E019ull));
}

std::uint64_t Rng::next() noexcept {
  state_ += kGamma;
  return mix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // Reject the top (2^64 mod bound) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

double Rng::unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace sopi
