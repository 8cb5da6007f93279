// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/curve.hpp"

namespace edcount {

EdwardsCurve::EdwardsCurve(Field field, FieldElement d)
    : field_(std::move(field)), d_(std::move(d)) {
  if (d_.field() != field_)
    throw DomainError("coefficient d belongs to a different field");
  if (d_.is_zero() || d_.is_one())
    throw DomainError("Edwards coefficient d must avoid 0 and 1");
}

EdwardsCurve::EdwardsCurve(Field field, u64 d)
    : EdwardsCurve(field, field.make(d)) {}

bool EdwardsCurve::contains(const FieldElement& x,
                            const FieldElement& y) const {
  FieldElement x2 = x * x;
  FieldElement y2 = y * y;
  return x2 + y2 == field_.one() + d_ * x2 * y2;
}

AffinePoint EdwardsCurve::point(FieldElement x, FieldElement y) const {
  if (!contains(x, y)) throw DomainError("point is not on the Edwards curve");
  return AffinePoint{std::move(x), std::move(y)};
}

AffinePoint EdwardsCurve::point(u64 x, u64 y) const {
  return point(field_.make(x), field_.make(y));
}

AffinePoint EdwardsCurve::identity() const {
  return AffinePoint{field_.zero(), field_.one()};
}

AffinePoint EdwardsCurve::negate(const AffinePoint& pt) const {
  return AffinePoint{-pt.x, pt.y};
}

AffinePoint EdwardsCurve::add(const AffinePoint& lhs,
                              const AffinePoint& rhs) const {
  if (!contains(lhs.x, lhs.y) || !contains(rhs.x, rhs.y))
    throw DomainError("addition operand is not on the curve");
  FieldElement cross = d_ * lhs.x * rhs.x * lhs.y * rhs.y;
  FieldElement den_x = field_.one() + cross;
  FieldElement den_y = field_.one() - cross;
  if (den_x.is_zero() || den_y.is_zero())
    throw ExceptionalAdditionError("addition denominator vanished");
  FieldElement num_x = lhs.x * rhs.y + lhs.y * rhs.x;
  FieldElement num_y = lhs.y * rhs.y - lhs.x * rhs.x;
  return AffinePoint{num_x / den_x, num_y / den_y};
}

AffinePoint EdwardsCurve::scalar_mul(u64 k, const AffinePoint& pt) const {
  AffinePoint acc = identity();
  AffinePoint base = pt;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    if (k >>= 1) base = add(base, base);
  }
  return acc;
}

MontgomeryCurve EdwardsCurve::montgomery_form() const {
  FieldElement one = field_.one();
  FieldElement two = one + one;
  FieldElement dm1 = d_ - one;
  return MontgomeryCurve(field_, dm1, two * (d_ + one), dm1);
}

MontgomeryCurve::MontgomeryCurve(Field field, FieldElement c3, FieldElement c2,
                                 FieldElement c1)
    : field_(std::move(field)),
      c3_(std::move(c3)),
      c2_(std::move(c2)),
      c1_(std::move(c1)) {
  if (c3_.field() != field_ || c2_.field() != field_ || c1_.field() != field_)
    throw DomainError("coefficient belongs to a different field");
  if (c3_.is_zero()) throw DomainError("cubic coefficient must be nonzero");
}

FieldElement MontgomeryCurve::rhs(const FieldElement& u) const {
  return ((c3_ * u + c2_) * u + c1_) * u;
}

bool MontgomeryCurve::contains(const FieldElement& u,
                               const FieldElement& v) const {
  return v * v == rhs(u);
}

AffinePoint MontgomeryCurve::point(FieldElement u, FieldElement v) const {
  if (!contains(u, v))
    throw DomainError("point is not on the Montgomery curve");
  return AffinePoint{std::move(u), std::move(v)};
}

AffinePoint MontgomeryCurve::point(u64 u, u64 v) const {
  return point(field_.make(u), field_.make(v));
}

}  // namespace edcount
