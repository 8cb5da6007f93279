// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <set>

#include "edcount/analysis.hpp"
#include "edcount/serialize.hpp"

using namespace edcount;

TEST_CASE("twist duality fixtures") {
  TwistReport t13 = twist_check(13, 2);
  CHECK(t13.order_d == 8);
  CHECK(t13.order_d_inverse == 20);
  CHECK(t13.legendre_d == -1);
  CHECK(t13.holds);  // 8 + 20 = 28 = 2*13 + 2
  CHECK(t13.oracle_verified);

  TwistReport t31 = twist_check(31, 2);
  CHECK(t31.legendre_d == 1);
  CHECK(t31.order_d == 28);
  CHECK(t31.order_d_inverse == 28);
  CHECK(t31.holds);

  TwistReport t74 = twist_check(7, 4);
  CHECK(t74.order_d == 4);
  CHECK(t74.order_d_inverse == 4);
  CHECK(t74.holds);
}

TEST_CASE("twist duality exhaustively") {
  for (u64 p : primes_in_range(3, 61)) {
    QrTable qr(p);
    for (u64 d = 2; d + 2 <= p; ++d) {
      u64 n_d = count_edwards_affine(qr, d);
      u64 n_inv = count_edwards_affine(qr, inv_mod(d, p));
      if (legendre(d, p) == 1)
        CHECK(n_d == n_inv);
      else
        CHECK(n_d + n_inv == 2 * p + 2);
    }
  }
}

TEST_CASE("twist point map") {
  EdwardsCurve e74(Field::prime(7), u64{4});
  CHECK(twist_point_map(e74, e74.point(1, 0)) ==
        AffinePoint{e74.field().make(1), e74.field().make(0)});
  CHECK(twist_point_map(e74, e74.point(6, 0)) ==
        AffinePoint{e74.field().make(6), e74.field().make(0)});
  CHECK_THROWS_AS(twist_point_map(e74, e74.point(0, 1)), DomainError);

  // Non-residue d has no rational sqrt(d).
  EdwardsCurve e73(Field::prime(7), u64{3});
  CHECK_THROWS_AS(twist_point_map(e73, e73.point(1, 0)), DomainError);

  // With the fixed branch the map lands on E_{d^-1} bijectively over the
  // x != 0 points.
  for (u64 p : {13ull, 17ull, 29ull}) {
    Field field = Field::prime(p);
    for (u64 d = 2; d + 2 <= p; ++d) {
      if (legendre(d, p) != 1) continue;
      EdwardsCurve curve(field, d);
      EdwardsCurve twin(field, inv_mod(d, p));
      std::set<std::pair<u64, u64>> images;
      u64 sources = 0;
      for (const AffinePoint& pt : enumerate_edwards(curve)) {
        if (pt.x.is_zero()) continue;
        ++sources;
        AffinePoint img = twist_point_map(curve, pt);
        CHECK(twin.contains(img.x, img.y));
        images.insert({img.x.rank(), img.y.rank()});
      }
      u64 targets = 0;
      for (const AffinePoint& pt : enumerate_edwards(twin))
        if (!pt.x.is_zero()) ++targets;
      CHECK(images.size() == sources);
      CHECK(images.size() == targets);
    }
  }
}

TEST_CASE("embedding degree") {
  CHECK(embedding_degree(12, 11, 12) == 2);
  CHECK(embedding_degree(10, 11, 12) == 1);  // p - 1 | p - 1
  CHECK(embedding_degree(8, 7, 12) == 2);
  CHECK(embedding_degree(7, 5, 2) == std::nullopt);  // k = 6 > cap
  CHECK(embedding_degree(1, 11, 12) == 1);
  CHECK_THROWS_AS(embedding_degree(0, 11, 12), DomainError);
}

TEST_CASE("scan over a d = 2 column") {
  ScanOptions options;
  options.p_min = 3;
  options.p_max = 31;
  options.d_fixed = {2};
  auto records = scan(options);
  REQUIRE(records.size() == 10);  // primes 3..31, d = 2 valid everywhere

  std::set<u64> supersingular;
  for (const ScanRecord& rec : records) {
    CHECK(rec.oracle_verified);
    if (rec.supersingular) {
      supersingular.insert(rec.p);
      CHECK(rec.projective_count == rec.p + 1);
      CHECK(rec.embedding_degree == 2);
    }
  }
  CHECK(supersingular == std::set<u64>{3, 7, 11, 19, 23, 31});
}

TEST_CASE("scan across all d") {
  ScanOptions options;
  options.p_min = 13;
  options.p_max = 13;
  auto records13 = scan(options);
  CHECK(records13.size() == 10);  // d in [2, 11]
  for (const ScanRecord& rec : records13) CHECK_FALSE(rec.supersingular);

  options.p_min = 7;
  options.p_max = 7;
  auto records7 = scan(options);
  std::set<u64> ss_d;
  for (const ScanRecord& rec : records7)
    if (rec.supersingular) ss_d.insert(rec.d);
  CHECK(ss_d == std::set<u64>{2, 4});  // closed under d -> d^{-1}
  for (u64 d : ss_d) CHECK(ss_d.count(inv_mod(d, 7)) == 1);
}

TEST_CASE("scan output is deterministic") {
  ScanOptions options;
  options.p_min = 3;
  options.p_max = 61;
  std::string a = scan_to_csv(scan(options));
  std::string b = scan_to_csv(scan(options));
  CHECK(a == b);
  CHECK(a.find(kScanCsvHeader) == 0);
}

TEST_CASE("scan rejects an empty range") {
  ScanOptions options;
  options.p_min = 11;
  options.p_max = 7;
  CHECK_THROWS_AS(scan(options), DomainError);
}
