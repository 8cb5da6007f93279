// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <set>

#include "edcount/errors.hpp"
#include "edcount/modular.hpp"

using namespace edcount;

namespace {

// Independent oracle: the set {x^2 mod p : x != 0}.
std::set<u64> nonzero_squares(u64 p) {
  std::set<u64> squares;
  for (u64 x = 1; x < p; ++x) squares.insert(mul_mod(x, x, p));
  return squares;
}

// Independent oracle: sum_{x=1}^{p-1} x^k mod p by direct summation.
u64 power_sum_direct(u64 p, u64 k) {
  u64 sum = 0;
  for (u64 x = 1; x < p; ++x) sum = (sum + pow_mod(x, k, p)) % p;
  return sum;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(1'000'003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));        // Carmichael
  CHECK_FALSE(is_prime(341));
  CHECK(is_prime(2'147'483'647));    // 2^31 - 1
  CHECK_FALSE(is_prime(u64{3215031751}));
}

TEST_CASE("legendre symbol against exhaustive square search") {
  CHECK(legendre(2, 7) == 1);    // 3^2 = 2 mod 7
  CHECK(legendre(2, 13) == -1);  // 2 is not among the squares mod 13
  CHECK(legendre(0, 7) == 0);
  CHECK_THROWS_AS(legendre(2, 15), DomainError);

  for (u64 p : primes_in_range(3, 200)) {
    std::set<u64> squares = nonzero_squares(p);
    for (u64 a = 0; a < p; ++a) {
      int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      CHECK(legendre(a, p) == expected);
    }
  }
}

TEST_CASE("modular square roots") {
  auto r = sqrt_mod(2, 7);
  REQUIRE(r.has_value());
  CHECK(r->first == 3);
  CHECK(r->second == 4);

  auto zero = sqrt_mod(0, 7);
  REQUIRE(zero.has_value());
  CHECK(zero->first == 0);
  CHECK(zero->second == 0);

  CHECK_FALSE(sqrt_mod(2, 13).has_value());

  // Tonelli-Shanks branch: p = 1 (mod 4).
  auto t = sqrt_mod(4, 13);
  REQUIRE(t.has_value());
  CHECK(mul_mod(t->first, t->first, 13) == 4);
  CHECK(t->second == 13 - t->first);

  for (u64 p : primes_in_range(3, 200)) {
    std::set<u64> squares = nonzero_squares(p);
    for (u64 a = 1; a < p; ++a) {
      auto roots = sqrt_mod(a, p);
      if (squares.count(a)) {
        REQUIRE(roots.has_value());
        CHECK(mul_mod(roots->first, roots->first, p) == a);
        CHECK(mul_mod(roots->second, roots->second, p) == a);
        CHECK(roots->first + roots->second == p);
        CHECK(legendre(a, p) == 1);
      } else {
        CHECK_FALSE(roots.has_value());
        CHECK(legendre(a, p) == -1);
      }
    }
  }
}

TEST_CASE("power sums over F_p*") {
  CHECK(power_sum(7, 6) == 6);  // p-1 | k
  CHECK(power_sum(7, 4) == 0);
  CHECK(power_sum(3, 2) == 2);

  for (u64 p : primes_in_range(3, 100))
    for (u64 k = 1; k <= 2 * p; ++k)
      CHECK(power_sum(p, k) == power_sum_direct(p, k));
}

TEST_CASE("inverse table matches Fermat inverses") {
  for (u64 p : {13ull, 101ull, 997ull}) {
    auto inv = inverse_table(p - 1, p);
    for (u64 i = 1; i < p; ++i) CHECK(mul_mod(i, inv[i], p) == 1);
  }
}

TEST_CASE("checked_pow overflow") {
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(1'000'003, 4), DomainError);
}
