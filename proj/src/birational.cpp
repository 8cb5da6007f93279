// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/birational.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "edcount/counting.hpp"

namespace edcount {

namespace {

std::string point_name(const char* side, const AffinePoint& pt) {
  std::string out(side);
  out += "(";
  bool first = true;
  for (u64 c : pt.x.coeffs()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  out += ";";
  first = true;
  for (u64 c : pt.y.coeffs()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  out += ")";
  return out;
}

u64 point_key(const AffinePoint& pt) {
  return pt.x.rank() * pt.x.field().order() + pt.y.rank();
}

// Square root in an arbitrary field: fast for degree 1, exhaustive
// otherwise (desk scale; callers hold the enumeration budget).
std::optional<FieldElement> field_sqrt(const FieldElement& a, u64 budget) {
  const Field& field = a.field();
  if (field.degree() == 1) {
    auto roots = sqrt_mod(a.residue(), field.characteristic());
    if (!roots) return std::nullopt;
    return field.make(roots->first);
  }
  for (const FieldElement& r : field.enumerate(budget))
    if (r * r == a) return r;
  return std::nullopt;
}

}  // namespace

std::optional<AffinePoint> montgomery_to_edwards(const EdwardsCurve& curve,
                                                 const AffinePoint& mp) {
  MontgomeryCurve mont = curve.montgomery_form();
  if (!mont.contains(mp.x, mp.y))
    throw DomainError("input point is not on the Montgomery curve");
  const Field& field = curve.field();
  const FieldElement one = field.one();
  if (mp.y.is_zero() || mp.x == one) return std::nullopt;
  FieldElement x = (one + mp.x) / (one - mp.x);
  FieldElement y = (mp.x + mp.x) / mp.y;
  return curve.point(std::move(x), std::move(y));
}

std::optional<AffinePoint> edwards_to_montgomery(const EdwardsCurve& curve,
                                                 const AffinePoint& ep) {
  if (!curve.contains(ep.x, ep.y))
    throw DomainError("input point is not on the Edwards curve");
  const Field& field = curve.field();
  const FieldElement one = field.one();
  if (ep.y.is_zero() || ep.x == -one) return std::nullopt;
  FieldElement u = (ep.x - one) / (ep.x + one);
  FieldElement v = (u + u) / ep.y;
  return curve.montgomery_form().point(std::move(u), std::move(v));
}

SpecialPointTable special_points(const EdwardsCurve& curve, u64 budget) {
  const Field& field = curve.field();
  const FieldElement one = field.one();
  const FieldElement zero = field.zero();
  const FieldElement& d = curve.d();
  MontgomeryCurve mont = curve.montgomery_form();

  SpecialPointTable table;
  table.edwards_side.push_back(curve.point(-one, zero));
  table.edwards_side.push_back(curve.point(one, zero));

  table.montgomery_side.push_back(mont.point(zero, zero));
  if (auto root = field_sqrt(d, budget)) {
    FieldElement two_root = *root + *root;
    FieldElement dm1 = d - one;
    FieldElement dp1 = d + one;
    table.montgomery_side.push_back(
        mont.point((-dp1 - two_root) / dm1, zero));
    table.montgomery_side.push_back(
        mont.point((-dp1 + two_root) / dm1, zero));
    table.montgomery_side.push_back(mont.point(one, -two_root));
    table.montgomery_side.push_back(mont.point(one, two_root));
  }
  std::sort(table.montgomery_side.begin(), table.montgomery_side.end());
  table.montgomery_side.erase(
      std::unique(table.montgomery_side.begin(), table.montgomery_side.end()),
      table.montgomery_side.end());
  return table;
}

BijectionReport verify_bijection(u64 p, u64 d, u64 budget) {
  Field field = Field::prime(p);
  EdwardsCurve curve(field, d);
  MontgomeryCurve mont = curve.montgomery_form();

  std::vector<AffinePoint> e_points = enumerate_edwards(curve, budget);
  std::vector<AffinePoint> m_points = enumerate_montgomery(mont, budget);
  SpecialPointTable specials = special_points(curve, budget);

  BijectionReport report;
  report.p = p;
  report.d = d % p;
  report.supersingular = is_supersingular(p, d);
  report.edwards_affine = e_points.size();
  report.montgomery_affine = m_points.size();
  report.edwards_special = specials.edwards_side.size();
  report.montgomery_special = specials.montgomery_side.size();

  std::unordered_set<u64> special_e, special_m;
  for (const AffinePoint& pt : specials.edwards_side)
    special_e.insert(point_key(pt));
  for (const AffinePoint& pt : specials.montgomery_side)
    special_m.insert(point_key(pt));

  // Forward: every non-special Edwards point must map to a distinct
  // non-special Montgomery point and come back to itself.
  std::unordered_set<u64> images;
  for (const AffinePoint& pt : e_points) {
    if (special_e.count(point_key(pt))) continue;
    auto img = edwards_to_montgomery(curve, pt);
    if (!img) {
      report.failures.push_back(point_name("E", pt) + " unexpectedly special");
      continue;
    }
    u64 key = point_key(*img);
    if (special_m.count(key)) {
      report.failures.push_back(point_name("E", pt) +
                                " maps to a special Montgomery point");
      continue;
    }
    if (!images.insert(key).second) {
      report.failures.push_back(point_name("E", pt) +
                                " collides with another image");
      continue;
    }
    auto back = montgomery_to_edwards(curve, *img);
    if (!back || !(*back == pt))
      report.failures.push_back(point_name("E", pt) +
                                " does not round-trip");
  }

  // Backward: the images must exhaust the non-special Montgomery points.
  u64 m_regular = 0;
  for (const AffinePoint& pt : m_points) {
    u64 key = point_key(pt);
    if (special_m.count(key)) continue;
    ++m_regular;
    if (!images.count(key))
      report.failures.push_back(point_name("M", pt) + " has no preimage");
  }

  report.mapped_pairs = images.size();
  report.bijective =
      report.failures.empty() &&
      report.mapped_pairs == report.edwards_affine - report.edwards_special &&
      report.mapped_pairs == m_regular;
  report.montgomery_affine_is_p = report.montgomery_affine == p;
  return report;
}

}  // namespace edcount
