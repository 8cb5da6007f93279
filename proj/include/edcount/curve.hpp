// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_CURVE_HPP_
#define EDCOUNT_CURVE_HPP_

#include <utility>

#include "edcount/field.hpp"

namespace edcount {

// Affine point with coordinates in some field. Instances handed out by the
// curve classes always satisfy the owning curve's equation.
struct AffinePoint {
  FieldElement x;
  FieldElement y;

  bool operator==(const AffinePoint& rhs) const {
    return x == rhs.x && y == rhs.y;
  }
  bool operator!=(const AffinePoint& rhs) const { return !(*this == rhs); }
  bool operator<(const AffinePoint& rhs) const {
    if (x < rhs.x) return true;
    if (rhs.x < x) return false;
    return y < rhs.y;
  }
};

class MontgomeryCurve;

// x^2 + y^2 = 1 + d x^2 y^2 over a finite field of odd characteristic,
// with d outside {0, 1}. The points form a group with identity (0, 1),
// inverse (x, y) -> (-x, y), and the unified addition law below. Addition
// can only fail (vanishing denominator) when d is a square in the field.
class EdwardsCurve {
 public:
  EdwardsCurve(Field field, FieldElement d);
  EdwardsCurve(Field field, u64 d);

  const Field& field() const { return field_; }
  const FieldElement& d() const { return d_; }

  bool contains(const FieldElement& x, const FieldElement& y) const;

  // Validated point constructor; throws DomainError off-curve.
  AffinePoint point(FieldElement x, FieldElement y) const;
  AffinePoint point(u64 x, u64 y) const;

  AffinePoint identity() const;
  AffinePoint negate(const AffinePoint& pt) const;

  // ((x1 y2 + y1 x2) / (1 + d x1 x2 y1 y2),
  //  (y1 y2 - x1 x2) / (1 - d x1 x2 y1 y2)).
  // Throws ExceptionalAdditionError when a denominator vanishes.
  AffinePoint add(const AffinePoint& lhs, const AffinePoint& rhs) const;

  // Double-and-add; 0 * P is the identity.
  AffinePoint scalar_mul(u64 k, const AffinePoint& pt) const;

  // The birationally equivalent v^2 = (d-1)u^3 + 2(d+1)u^2 + (d-1)u.
  MontgomeryCurve montgomery_form() const;

 private:
  Field field_;
  FieldElement d_;
};

// v^2 = c3 u^3 + c2 u^2 + c1 u with c3 != 0. Curves derived from an
// Edwards coefficient d carry (c3, c2, c1) = (d-1, 2(d+1), d-1).
class MontgomeryCurve {
 public:
  MontgomeryCurve(Field field, FieldElement c3, FieldElement c2,
                  FieldElement c1);

  const Field& field() const { return field_; }
  const FieldElement& c3() const { return c3_; }
  const FieldElement& c2() const { return c2_; }
  const FieldElement& c1() const { return c1_; }

  bool contains(const FieldElement& u, const FieldElement& v) const;
  AffinePoint point(FieldElement u, FieldElement v) const;
  AffinePoint point(u64 u, u64 v) const;

  // Right-hand side c3 u^3 + c2 u^2 + c1 u.
  FieldElement rhs(const FieldElement& u) const;

 private:
  Field field_;
  FieldElement c3_, c2_, c1_;
};

}  // namespace edcount

#endif  // EDCOUNT_CURVE_HPP_
