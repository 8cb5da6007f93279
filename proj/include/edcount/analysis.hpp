// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_ANALYSIS_HPP_
#define EDCOUNT_ANALYSIS_HPP_

#include <optional>
#include <vector>

#include "edcount/counting.hpp"
#include "edcount/curve.hpp"

namespace edcount {

// Orders of the pair E_d, E_{d^-1} over F_p and whether they satisfy the
// twist relation: equal orders when d is a residue, orders summing to
// 2p + 2 when it is not.
struct TwistReport {
  u64 p = 0;
  u64 d = 0;
  u64 d_inverse = 0;
  int legendre_d = 0;
  u64 order_d = 0;          // affine order of E_d
  u64 order_d_inverse = 0;  // affine order of E_{d^-1}
  bool holds = false;
  bool oracle_verified = false;
};

TwistReport twist_check(u64 p, u64 d, u64 budget = kDefaultEnumBudget);

// Image of (x0, y0) on E_d under (x0, y0) -> (1/x0, y0 * sqrt(d)), landing
// on E_{d^-1}; the scaling is by the root of d whose canonical
// representative is <= (p-1)/2, equivalently division by the matching
// root of the target coefficient d^-1. Fixing that branch makes the map a
// bijection between the x != 0 points of the two curves. Throws
// DomainError when x0 = 0 (no image) or d is a non-residue.
AffinePoint twist_point_map(const EdwardsCurve& curve, const AffinePoint& pt);

// Smallest k <= k_cap with group_order | p^k - 1, or nullopt.
std::optional<unsigned> embedding_degree(u64 group_order, u64 p,
                                         unsigned k_cap);

// One classified (p, d) cell of a parameter scan.
struct ScanRecord {
  u64 p = 0;
  u64 d = 0;
  int legendre_d = 0;
  bool supersingular = false;
  u64 affine_count = 0;
  u64 projective_count = 0;
  std::optional<unsigned> embedding_degree;  // nullopt: none within cap
  CountMethod method = CountMethod::kCongruenceParity;
  bool oracle_verified = false;
  bool budget_exceeded = false;

  bool operator==(const ScanRecord&) const = default;
};

struct ScanOptions {
  u64 p_min = 3;
  u64 p_max = 3;
  // Empty means every d in [2, p-2]; otherwise the listed coefficients,
  // skipping the cells where d mod p lands in {0, 1}.
  std::vector<u64> d_fixed;
  unsigned embed_cap = 12;
  u64 budget = kDefaultEnumBudget;
};

// Classifies every cell of the requested grid, ordered by (p, d). Counting
// goes through the congruence route; cells with p inside the budget are
// re-counted by the enumeration kernel and flagged oracle_verified. Cells
// are independent and evaluated concurrently; the output order and content
// are deterministic.
std::vector<ScanRecord> scan(const ScanOptions& options);

}  // namespace edcount

#endif  // EDCOUNT_ANALYSIS_HPP_
