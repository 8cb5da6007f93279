// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <set>
#include <utility>

#include "edcount/birational.hpp"
#include "edcount/counting.hpp"

using namespace edcount;

namespace {

std::set<std::pair<u64, u64>> key_set(const std::vector<AffinePoint>& pts) {
  std::set<std::pair<u64, u64>> out;
  for (const AffinePoint& pt : pts) out.insert({pt.x.rank(), pt.y.rank()});
  return out;
}

}  // namespace

TEST_CASE("montgomery-to-edwards specials") {
  EdwardsCurve curve(Field::prime(7), u64{2});
  MontgomeryCurve mont = curve.montgomery_form();

  CHECK_FALSE(montgomery_to_edwards(curve, mont.point(0, 0)).has_value());
  // sqrt(2) = {3, 4} mod 7, so (1, 2 sqrt 2) = (1, 6) and (1, 1).
  CHECK_FALSE(montgomery_to_edwards(curve, mont.point(1, 6)).has_value());
  CHECK_FALSE(montgomery_to_edwards(curve, mont.point(1, 1)).has_value());

  CHECK_THROWS_AS(montgomery_to_edwards(curve, AffinePoint{
                      curve.field().make(2), curve.field().make(1)}),
                  DomainError);
}

TEST_CASE("every regular Montgomery point maps onto the Edwards curve") {
  EdwardsCurve curve(Field::prime(11), u64{2});
  MontgomeryCurve mont = curve.montgomery_form();
  for (const AffinePoint& mp : enumerate_montgomery(mont)) {
    auto image = montgomery_to_edwards(curve, mp);
    if (!image) continue;
    CHECK(curve.contains(image->x, image->y));
  }
}

TEST_CASE("edwards-to-montgomery specials and the universal image of (0,1)") {
  for (u64 p : {7ull, 11ull, 13ull}) {
    for (u64 d = 2; d + 2 <= p; ++d) {
      EdwardsCurve curve(Field::prime(p), d);
      CHECK_FALSE(edwards_to_montgomery(curve, curve.point(1, 0)).has_value());
      CHECK_FALSE(
          edwards_to_montgomery(curve, curve.point(p - 1, 0)).has_value());
      // (0, 1) -> (-1, -2) independently of d.
      auto image = edwards_to_montgomery(curve, curve.point(0, 1));
      REQUIRE(image.has_value());
      CHECK(image->x.residue() == p - 1);
      CHECK(image->y.residue() == p - 2);
    }
  }
}

TEST_CASE("special point table") {
  // d = 2, p = 7: five Montgomery-side points.
  SpecialPointTable t72 = special_points(EdwardsCurve(Field::prime(7), u64{2}));
  CHECK(t72.montgomery_side.size() == 5);
  CHECK(key_set(t72.montgomery_side) ==
        std::set<std::pair<u64, u64>>{{0, 0}, {3, 0}, {5, 0}, {1, 1}, {1, 6}});
  CHECK(key_set(t72.edwards_side) ==
        std::set<std::pair<u64, u64>>{{1, 0}, {6, 0}});

  // d = 2, p = 11: non-residue, only the origin.
  SpecialPointTable t112 =
      special_points(EdwardsCurve(Field::prime(11), u64{2}));
  CHECK(t112.montgomery_side.size() == 1);
  CHECK(t112.montgomery_side[0].x.is_zero());
  CHECK(t112.montgomery_side[0].y.is_zero());

  // Every listed point satisfies its curve equation by construction;
  // membership is what point() validates, so reaching here is the check.
  for (u64 p : primes_in_range(3, 50)) {
    for (u64 d = 2; d + 2 <= p; ++d) {
      EdwardsCurve curve(Field::prime(p), d);
      SpecialPointTable table = special_points(curve);
      CHECK(table.edwards_side.size() == 2);
      CHECK(table.montgomery_side.size() ==
            (legendre(d, p) == 1 ? 5 : 1));
    }
  }
}

TEST_CASE("round trips off the special points") {
  for (u64 p : primes_in_range(3, 100)) {
    Field field = Field::prime(p);
    for (u64 d = 2; d + 2 <= p; ++d) {
      EdwardsCurve curve(field, d);
      MontgomeryCurve mont = curve.montgomery_form();
      u64 failures = 0;
      for (const AffinePoint& ep : enumerate_edwards(curve)) {
        auto img = edwards_to_montgomery(curve, ep);
        if (!img) continue;
        auto back = montgomery_to_edwards(curve, *img);
        if (!back || !(*back == ep)) ++failures;
      }
      for (const AffinePoint& mp : enumerate_montgomery(mont)) {
        auto img = montgomery_to_edwards(curve, mp);
        if (!img) continue;
        auto back = edwards_to_montgomery(curve, *img);
        if (!back || !(*back == mp)) ++failures;
      }
      CHECK(failures == 0);
    }
  }
}

TEST_CASE("bijection reports") {
  BijectionReport r11 = verify_bijection(11, 2);
  CHECK(r11.bijective);
  CHECK(r11.mapped_pairs == 10);
  CHECK(r11.montgomery_affine == 11);
  CHECK(r11.montgomery_affine_is_p);

  BijectionReport r7 = verify_bijection(7, 2);
  CHECK(r7.bijective);
  CHECK(r7.mapped_pairs == 2);
  CHECK(r7.montgomery_affine == 7);

  BijectionReport r31 = verify_bijection(31, 2);
  CHECK(r31.bijective);
  CHECK(r31.mapped_pairs == 26);
  CHECK(r31.montgomery_affine == 31);

  // Count reconciliation on supersingular cells: |E_d| - |E specials| =
  // |E_M| - |M specials|.
  for (u64 p : primes_in_range(3, 100)) {
    for (u64 d = 2; d + 2 <= p; ++d) {
      if (!is_supersingular(p, d)) continue;
      BijectionReport r = verify_bijection(p, d);
      CHECK(r.bijective);
      CHECK(r.edwards_affine - r.edwards_special ==
            r.montgomery_affine - r.montgomery_special);
      CHECK(r.montgomery_affine_is_p);
    }
  }
}
