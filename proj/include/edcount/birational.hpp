// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_BIRATIONAL_HPP_
#define EDCOUNT_BIRATIONAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "edcount/curve.hpp"

namespace edcount {

// The birational pair substitution between E_d and its Montgomery form is
//   x = (1 + u) / (1 - u),   y = 2u / v
// with inverse
//   u = (x - 1) / (x + 1),   v = 2u / y.
// Each direction is undefined exactly on the "special" points where a
// denominator vanishes; those are returned as std::nullopt, never as a
// synthesized point at infinity.

// Image of a Montgomery point (u, v) on E_d, or nullopt when u = 1 or
// v = 0. Throws DomainError when (u, v) is not on the Montgomery form.
std::optional<AffinePoint> montgomery_to_edwards(const EdwardsCurve& curve,
                                                 const AffinePoint& mp);

// Image of an Edwards point (x, y) on the Montgomery form, or nullopt when
// x = -1 or y = 0. Throws DomainError when (x, y) is not on E_d.
std::optional<AffinePoint> edwards_to_montgomery(const EdwardsCurve& curve,
                                                 const AffinePoint& ep);

// The points that have no image under the maps above. The Edwards side is
// always {(-1, 0), (1, 0)}. The Montgomery side is {(0, 0)} when d is a
// non-residue; when d is a residue it additionally contains the two roots
// ((-(d+1) -+ 2 sqrt(d)) / (d-1), 0) and (1, -+2 sqrt(d)).
struct SpecialPointTable {
  std::vector<AffinePoint> montgomery_side;
  std::vector<AffinePoint> edwards_side;
};

SpecialPointTable special_points(const EdwardsCurve& curve,
                                 u64 budget = kDefaultEnumBudget);

// Result of exhaustively matching both curves' points through the maps.
struct BijectionReport {
  u64 p = 0;
  u64 d = 0;
  u64 edwards_affine = 0;
  u64 montgomery_affine = 0;
  u64 edwards_special = 0;
  u64 montgomery_special = 0;
  u64 mapped_pairs = 0;  // matched non-special points per side
  bool bijective = false;
  bool supersingular = false;
  // For supersingular d: the Montgomery side must have exactly p affine
  // points (projective order p + 1 with its single point at infinity).
  bool montgomery_affine_is_p = false;
  std::vector<std::string> failures;  // unmatched points, human-readable
};

// Checks that the maps restrict to mutually inverse bijections between the
// non-special points of E_d and of its Montgomery form, and records the
// supersingular order claims. Unmatched points are reported by name.
BijectionReport verify_bijection(u64 p, u64 d,
                                 u64 budget = kDefaultEnumBudget);

}  // namespace edcount

#endif  // EDCOUNT_BIRATIONAL_HPP_
