#include "sopi/modarith.hpp"

#include "sopi/errors.hpp"

#include <string>

namespace sopi {

namespace {
constexpr std::uint64_t kLimbMask = (std::uint64_t{1} << 31) - 1;
constexpr std::uint64_t kReduceLimit = std::uint64_t{1} << 62;
}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

FieldParams FieldParams::make(std::uint32_t n) {
  if (n < 3 || n > kMersenne31) {
    throw InvalidArgument("modulus N must lie in [3, 2^31-1], got " + std::to_string(n));
  }
  if (!is_prime(n)) {
    throw InvalidArgument("modulus N must be prime, got " + std::to_string(n));
  }
  return FieldParams(n);
}

namespace {

// C = A + D0 + D1 with D0, D1 the low and high 31-bit limbs of x, then two
// conditional subtractions. a < N and x < 2^62 bound C below 3N.
std::uint32_t fold_mersenne(std::uint32_t a, std::uint64_t x) noexcept {
  const std::uint64_t low = x & kLimbMask;
  const std::uint64_t high = (x >> 31) & kLimbMask;
  std::uint64_t c = a + low + high;
  if (c >= kMersenne31) c -= kMersenne31;
  if (c >= kMersenne31) c -= kMersenne31;
  return static_cast<std::uint32_t>(c);
}

}  // namespace

std::uint32_t mersenne_reduce(std::uint64_t x) {
  if (x >= kReduceLimit) {
    throw InvalidArgument("mersenne_reduce input must be < 2^62");
  }
  return fold_mersenne(0, x);
}

std::uint32_t mod_mul_add(std::uint32_t a, std::uint32_t i, std::uint32_t b, const FieldParams& params) {
  const std::uint64_t product = static_cast<std::uint64_t>(i) * b;
  if (params.is_mersenne31()) {
    return fold_mersenne(a, product);
  }
  return static_cast<std::uint32_t>((product + a) % params.n());
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, const FieldParams& params) {
  return mod_mul_add(0, a, b, params);
}

std::uint32_t mod_inv(std::uint32_t a, const FieldParams& params) {
  const std::int64_t n = params.n();
  std::int64_t r0 = n;
  std::int64_t r1 = a % n;
  if (r1 == 0) {
    throw InvalidArgument("zero has no multiplicative inverse");
  }
  std::int64_t t0 = 0;
  std::int64_t t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return to_residue(t0, params);
}

std::uint32_t to_residue(std::int64_t v, const FieldParams& params) noexcept {
  const std::int64_t n = params.n();
  std::int64_t r = v % n;
  if (r < 0) r += n;
  return static_cast<std::uint32_t>(r);
}

std::int64_t centered(std::uint32_t r, const FieldParams& params) noexcept {
  const std::int64_t n = params.n();
  const std::int64_t v = r;
  return (2 * v > n) ? v - n : v;
}

}  // namespace sopi
