// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_ENUMERATE_HPP_
#define EDCOUNT_ENUMERATE_HPP_

#include <cstdint>
#include <vector>

#include "edcount/curve.hpp"

namespace edcount {

// Quadratic-residue lookup table for F_p. Building it costs O(p) and lets
// the count kernels decide "is t a square" in one load.
class QrTable {
 public:
  explicit QrTable(u64 p);

  u64 p() const { return p_; }
  // a must lie in [0, p). Returns true iff a is a nonzero square.
  bool is_square(u64 a) const { return table_[a] != 0; }

 private:
  u64 p_;
  std::vector<std::uint8_t> table_;
};

// ---- point-listing oracles ----
//
// These walk the whole field and are the ground truth the faster counting
// routes are checked against. Output order is lexicographic in the
// coordinates' canonical coefficient vectors.

std::vector<AffinePoint> enumerate_edwards(const EdwardsCurve& curve,
                                           u64 budget = kDefaultEnumBudget);

std::vector<AffinePoint> enumerate_montgomery(const MontgomeryCurve& curve,
                                              u64 budget = kDefaultEnumBudget);

// ---- prime-field count kernels ----
//
// Counting solutions of y^2 = t(x) needs only one pass over x with a
// residue lookup, so the loops below are data-parallel over x-stripes.
// Each OpenMP kernel has a serial twin used as the reference in tests and
// as the baseline in the benchmark target.

// Affine points of x^2 + y^2 = 1 + d x^2 y^2 over F_p.
u64 count_edwards_affine(u64 p, u64 d);
u64 count_edwards_affine(const QrTable& qr, u64 d);
u64 count_edwards_affine_serial(u64 p, u64 d);

// Affine points of v^2 = (d-1)u^3 + 2(d+1)u^2 + (d-1)u over F_p.
u64 count_montgomery_affine(u64 p, u64 d);
u64 count_montgomery_affine(const QrTable& qr, u64 d);
u64 count_montgomery_affine_serial(u64 p, u64 d);

// Solutions of y^2 = (x^2 - 1)(d x^2 - 1) over F_p.
u64 count_product_curve(u64 p, u64 d);
u64 count_product_curve(const QrTable& qr, u64 d);
u64 count_product_curve_serial(u64 p, u64 d);

}  // namespace edcount

#endif  // EDCOUNT_ENUMERATE_HPP_
