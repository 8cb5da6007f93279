// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace edcount {

TwistReport twist_check(u64 p, u64 d, u64 budget) {
  require_odd_prime(p);
  d %= p;
  if (d == 0 || d == 1)
    throw DomainError("Edwards coefficient d must avoid 0 and 1 mod p");

  TwistReport report;
  report.p = p;
  report.d = d;
  report.d_inverse = inv_mod(d, p);
  report.legendre_d = legendre(d, p);

  CountReport lhs = resolve_exact_count(p, d, budget);
  CountReport rhs = resolve_exact_count(p, report.d_inverse, budget);
  report.order_d = lhs.affine_count;
  report.order_d_inverse = rhs.affine_count;

  if (p <= budget) {
    report.oracle_verified =
        count_edwards_affine(p, d) == report.order_d &&
        count_edwards_affine(p, report.d_inverse) == report.order_d_inverse;
    if (!report.oracle_verified)
      throw InconsistencyError("twist orders disagree with enumeration");
  }

  report.holds =
      report.legendre_d == 1
          ? report.order_d == report.order_d_inverse
          : report.order_d + report.order_d_inverse == 2 * p + 2;
  return report;
}

AffinePoint twist_point_map(const EdwardsCurve& curve, const AffinePoint& pt) {
  const Field& field = curve.field();
  if (field.degree() != 1)
    throw DomainError("twist map is defined over prime fields");
  if (!curve.contains(pt.x, pt.y))
    throw DomainError("input point is not on the curve");
  if (pt.x.is_zero())
    throw DomainError("points with x = 0 are handled separately by the "
                      "twist correspondence");
  const u64 p = field.characteristic();
  auto root = sqrt_mod(curve.d().residue(), p);
  if (!root) throw DomainError("twist map requires d to be a square");
  // Canonical branch of sqrt(d); scaling by it is the same as dividing by
  // the matching root of the target coefficient d^-1, which is what makes
  // the image satisfy the E_{d^-1} equation.
  FieldElement sqrt_d = field.make(root->first);
  EdwardsCurve twisted(field, curve.d().inverse());
  return twisted.point(pt.x.inverse(), pt.y * sqrt_d);
}

std::optional<unsigned> embedding_degree(u64 group_order, u64 p,
                                         unsigned k_cap) {
  if (group_order == 0) throw DomainError("group order must be positive");
  if (group_order == 1) return 1;
  // group_order | p^k - 1 iff p^k = 1 (mod group_order).
  u64 pk = 1 % group_order;
  for (unsigned k = 1; k <= k_cap; ++k) {
    pk = mul_mod(pk, p % group_order, group_order);
    if (pk == 1) return k;
  }
  return std::nullopt;
}

namespace {

ScanRecord scan_cell(u64 p, u64 d, const ScanOptions& options) {
  ScanRecord rec;
  rec.p = p;
  rec.d = d;

  CountReport counted = resolve_exact_count(p, d, options.budget);
  rec.legendre_d = counted.legendre_d;
  rec.supersingular = counted.supersingular;
  rec.affine_count = counted.affine_count;
  rec.projective_count = counted.projective_count;
  rec.method = counted.method;

  if (p <= options.budget) {
    u64 oracle = count_edwards_affine(p, d);
    if (oracle != rec.affine_count)
      throw InconsistencyError(
          "congruence count disagrees with enumeration at p=" +
          std::to_string(p) + " d=" + std::to_string(d));
    rec.oracle_verified = true;
  }

  if (rec.supersingular) {
    auto [affine, projective] = supersingular_order(p, d);
    if (affine != rec.affine_count || projective != rec.projective_count)
      throw InconsistencyError(
          "supersingular order formula disagrees at p=" + std::to_string(p) +
          " d=" + std::to_string(d));
  }

  rec.embedding_degree =
      embedding_degree(rec.projective_count, p, options.embed_cap);
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan(const ScanOptions& options) {
  if (options.p_min > options.p_max)
    throw DomainError("empty prime range");

  std::vector<std::pair<u64, u64>> cells;
  for (u64 p : primes_in_range(std::max<u64>(options.p_min, 3),
                               options.p_max)) {
    if (options.d_fixed.empty()) {
      for (u64 d = 2; d + 2 <= p; ++d) cells.emplace_back(p, d);
    } else {
      for (u64 d : options.d_fixed)
        if (d % p != 0 && d % p != 1) cells.emplace_back(p, d % p);
    }
  }

  std::vector<ScanRecord> records(cells.size());
  std::vector<std::string> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (i64 i = 0; i < static_cast<i64>(cells.size()); ++i) {
    try {
      records[i] = scan_cell(cells[i].first, cells[i].second, options);
    } catch (const BudgetExceededError&) {
      ScanRecord rec;
      rec.p = cells[i].first;
      rec.d = cells[i].second;
      rec.budget_exceeded = true;
      records[i] = rec;
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const std::string& err : errors)
    if (!err.empty()) throw InconsistencyError(err);
  return records;
}

}  // namespace edcount
