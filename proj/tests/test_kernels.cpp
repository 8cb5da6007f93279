// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// The parallel kernels must agree with their serial reference twins and
// with the listing oracles.

#include <doctest.h>

#include "edcount/enumerate.hpp"

using namespace edcount;

TEST_CASE("parallel count kernels match the serial references") {
  for (u64 p : {u64{13}, u64{101}, u64{1009}, u64{10007}, u64{104729}}) {
    for (u64 d : {u64{2}, u64{3}, u64{5}, p - 2}) {
      if (d % p == 0 || d % p == 1) continue;
      CHECK(count_edwards_affine(p, d) == count_edwards_affine_serial(p, d));
      CHECK(count_montgomery_affine(p, d) ==
            count_montgomery_affine_serial(p, d));
      CHECK(count_product_curve(p, d) == count_product_curve_serial(p, d));
    }
  }
}

TEST_CASE("count kernels match the listing oracles") {
  for (u64 p : primes_in_range(3, 120)) {
    Field field = Field::prime(p);
    for (u64 d = 2; d + 2 <= p; ++d) {
      EdwardsCurve curve(field, d);
      CHECK(count_edwards_affine(p, d) == enumerate_edwards(curve).size());
      CHECK(count_montgomery_affine(p, d) ==
            enumerate_montgomery(curve.montgomery_form()).size());
    }
  }
}

TEST_CASE("QrTable agrees with the Legendre symbol") {
  for (u64 p : {23ull, 1009ull}) {
    QrTable qr(p);
    for (u64 a = 1; a < p; ++a)
      CHECK(qr.is_square(a) == (legendre(a, p) == 1));
  }
}

TEST_CASE("kernels validate their inputs") {
  CHECK_THROWS_AS(count_edwards_affine(15, 2), DomainError);
  CHECK_THROWS_AS(count_edwards_affine(13, 14), DomainError);  // d = 1 mod p
}
