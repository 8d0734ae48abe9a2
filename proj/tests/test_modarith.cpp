#include "oracles.hpp"

#include "sopi/errors.hpp"
#include "sopi/modarith.hpp"
#include "sopi/rng.hpp"

#include <doctest.h>

using namespace sopi;

TEST_CASE("field params accept primes only") {
  CHECK(FieldParams::make(7).n() == 7);
  CHECK(FieldParams::mersenne31().is_mersenne31());
  CHECK_FALSE(FieldParams::make(10007).is_mersenne31());
  CHECK_THROWS_AS(FieldParams::make(9), InvalidArgument);
  CHECK_THROWS_AS(FieldParams::make(2), InvalidArgument);
  CHECK_THROWS_AS(FieldParams::make(0), InvalidArgument);
}

TEST_CASE("mersenne_reduce examples") {
  const std::uint64_t n = kMersenne31;
  CHECK(mersenne_reduce(0) == 0);
  CHECK(mersenne_reduce(n) == 0);
  // N+1 and (N-1) + 1*2 are the same integer; both reduce to 1.
  CHECK(oracle::wide_mod(n + 1, n) == 1);
  CHECK(mersenne_reduce(n + 1) == 1);
  CHECK(mersenne_reduce((n - 1) + 1 * 2) == 1);
  CHECK(mersenne_reduce(2 * n) == 0);
  CHECK(mersenne_reduce((std::uint64_t{1} << 62) - 1) == oracle::wide_mod((std::uint64_t{1} << 62) - 1, n));
  CHECK_THROWS_AS(mersenne_reduce(std::uint64_t{1} << 62), InvalidArgument);
}

TEST_CASE("mersenne_reduce matches the wide-integer oracle on random inputs") {
  Rng rng(20241019);
  for (int k = 0; k < 200000; ++k) {
    const std::uint64_t x = rng.next() >> 2;
    REQUIRE(mersenne_reduce(x) == oracle::wide_mod(x, kMersenne31));
  }
}

TEST_CASE("mod_mul_add examples") {
  const auto big = FieldParams::mersenne31();
  const auto n = big.n();
  CHECK(mod_mul_add(5, 3, 7, big) == 26);
  CHECK(mod_mul_add(n - 1, 1, 2, big) == 1);
  CHECK(mod_mul_add(0, 0, 12345, big) == 0);
  CHECK(mod_mul_add(n - 1, n - 1, n - 1, big) == oracle::affine(n - 1, n - 1, n - 1, n));
  const auto small = FieldParams::make(7);
  CHECK(mod_mul_add(3, 4, 5, small) == 2);
}

TEST_CASE("mod_mul_add matches the oracle for both reduction paths") {
  Rng rng(7);
  for (const std::uint32_t prime : {kMersenne31, 2147483629u, 10007u}) {
    const auto field = FieldParams::make(prime);
    for (int k = 0; k < 100000; ++k) {
      const auto a = static_cast<std::uint32_t>(rng.below(prime));
      const auto i = static_cast<std::uint32_t>(rng.below(prime));
      const auto b = static_cast<std::uint32_t>(rng.below(prime));
      REQUIRE(mod_mul_add(a, i, b, field) == oracle::affine(a, i, b, prime));
    }
  }
}

TEST_CASE("mod_inv examples and errors") {
  const auto f7 = FieldParams::make(7);
  CHECK(mod_inv(1, f7) == 1);
  CHECK(oracle::inverse_by_search(3, 7) == 5);
  CHECK(mod_inv(3, f7) == 5);
  CHECK(mod_inv(2, FieldParams::mersenne31()) == 1073741824u);
  CHECK(oracle::wide_mod(2ull * 1073741824ull, kMersenne31) == 1);
  CHECK_THROWS_AS(mod_inv(0, f7), InvalidArgument);
}

TEST_CASE("mod_inv is an inverse for every residue of small primes") {
  for (const std::uint32_t prime : {7u, 11u, 101u, 10007u}) {
    const auto field = FieldParams::make(prime);
    for (std::uint32_t a = 1; a < prime; ++a) {
      REQUIRE(oracle::wide_mod(static_cast<std::uint64_t>(mod_inv(a, field)) * a, prime) == 1);
    }
  }
  for (std::uint32_t a = 1; a < 101; ++a) {
    CHECK(mod_inv(a, FieldParams::make(101)) == oracle::inverse_by_search(a, 101));
  }
}

TEST_CASE("centered representatives and residues") {
  const auto f = FieldParams::make(11);
  CHECK(centered(5, f) == 5);
  CHECK(centered(6, f) == -5);
  CHECK(centered(10, f) == -1);
  CHECK(to_residue(-1, f) == 10);
  CHECK(to_residue(-22, f) == 0);
}
