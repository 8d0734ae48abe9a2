#pragma once

#include <cstdint>

namespace sopi {

/// The Mersenne prime 2^31 - 1, the symbol-ID space of RaptorQ.
inline constexpr std::uint32_t kMersenne31 = 0x7FFFFFFFu;

/// Prime modulus N describing how many symbol IDs exist for a source block.
///
/// Construct through FieldParams::make, which checks primality. N is capped
/// at 2^31 - 1 so that a + i*b always fits in 64 bits.
class FieldParams {
 public:
  static FieldParams make(std::uint32_t n);
  static FieldParams mersenne31() { return make(kMersenne31); }

  std::uint32_t n() const noexcept { return n_; }
  bool is_mersenne31() const noexcept { return n_ == kMersenne31; }

  friend bool operator==(const FieldParams&, const FieldParams&) = default;

 private:
  explicit FieldParams(std::uint32_t n) : n_(n) {}
  std::uint32_t n_;
};

bool is_prime(std::uint64_t n) noexcept;

/// x mod (2^31 - 1) by 31-bit limb folding. Requires x < 2^62.
///
/// C = D0 + D1 followed by two conditional subtractions "if C >= N".
std::uint32_t mersenne_reduce(std::uint64_t x);

/// (a + i*b) mod N. a, b, i must already be residues.
std::uint32_t mod_mul_add(std::uint32_t a, std::uint32_t i, std::uint32_t b, const FieldParams& params);

/// (a * b) mod N.
std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, const FieldParams& params);

/// Multiplicative inverse by extended Euclid. Throws InvalidArgument for a == 0 (mod N).
std::uint32_t mod_inv(std::uint32_t a, const FieldParams& params);

/// Maps a signed integer to its residue in [0, N).
std::uint32_t to_residue(std::int64_t v, const FieldParams& params) noexcept;

/// Centered representative of a residue, in (-N/2, N/2].
std::int64_t centered(std::uint32_t r, const FieldParams& params) noexcept;

}  // namespace sopi
