// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/enumerate.hpp"

#include <algorithm>
#include <unordered_map>

namespace edcount {

QrTable::QrTable(u64 p)
    : p_((require_odd_prime(p), p)), table_(p, 0) {
  // x and p-x share a square, so x <= (p-1)/2 hits every residue once and
  // the parallel writes land on distinct slots.
  const i64 half = static_cast<i64>((p - 1) / 2);
#pragma omp parallel for schedule(static)
  for (i64 x = 1; x <= half; ++x)
    table_[mul_mod(static_cast<u64>(x), static_cast<u64>(x), p_)] = 1;
}

namespace {

// Number of y in F_p with y^2 = t, already knowing t != 0: 2 or 0.
inline u64 pair_count(const QrTable& qr, u64 t) {
  return qr.is_square(t) ? 2 : 0;
}

// Per-x solution count for the Edwards equation, written as
// y^2 (1 - d x^2) = 1 - x^2.
inline u64 edwards_solutions_at(const QrTable& qr, u64 d, u64 x) {
  const u64 p = qr.p();
  u64 x2 = mul_mod(x, x, p);
  u64 num = (1 + p - x2) % p;              // 1 - x^2
  u64 den = (1 + p - mul_mod(d, x2, p)) % p;  // 1 - d x^2
  if (den == 0) return 0;  // forces 1 - x^2 = 0 too, impossible for d != 1
  if (num == 0) return 1;  // y = 0
  // #y = 1 + chi(num/den) and chi(num/den) = chi(num * den).
  return pair_count(qr, mul_mod(num, den, p));
}

inline u64 montgomery_solutions_at(const QrTable& qr, u64 d, u64 u) {
  const u64 p = qr.p();
  const u64 c3 = (d + p - 1) % p;
  const u64 c2 = (2 * (d + 1)) % p;
  u64 t = mul_mod((mul_mod(c3, u, p) + c2) % p, u, p);
  t = mul_mod((t + c3) % p, u, p);
  if (t == 0) return 1;
  return pair_count(qr, t);
}

inline u64 product_solutions_at(const QrTable& qr, u64 d, u64 x) {
  const u64 p = qr.p();
  u64 x2 = mul_mod(x, x, p);
  u64 lhs = (x2 + p - 1) % p;                  // x^2 - 1
  u64 rhs = (mul_mod(d, x2, p) + p - 1) % p;   // d x^2 - 1
  u64 t = mul_mod(lhs, rhs, p);
  if (t == 0) return 1;
  return pair_count(qr, t);
}

void check_valid_d(u64 p, u64 d) {
  require_odd_prime(p);
  d %= p;
  if (d == 0 || d == 1)
    throw DomainError("Edwards coefficient d must avoid 0 and 1 mod p");
}

}  // namespace

u64 count_edwards_affine(const QrTable& qr, u64 d) {
  const u64 p = qr.p();
  d %= p;
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (i64 x = 0; x < static_cast<i64>(p); ++x)
    count += edwards_solutions_at(qr, d, static_cast<u64>(x));
  return count;
}

u64 count_edwards_affine(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  return count_edwards_affine(qr, d);
}

u64 count_edwards_affine_serial(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  d %= p;
  u64 count = 0;
  for (u64 x = 0; x < p; ++x) count += edwards_solutions_at(qr, d, x);
  return count;
}

u64 count_montgomery_affine(const QrTable& qr, u64 d) {
  const u64 p = qr.p();
  d %= p;
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (i64 u = 0; u < static_cast<i64>(p); ++u)
    count += montgomery_solutions_at(qr, d, static_cast<u64>(u));
  return count;
}

u64 count_montgomery_affine(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  return count_montgomery_affine(qr, d);
}

u64 count_montgomery_affine_serial(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  d %= p;
  u64 count = 0;
  for (u64 u = 0; u < p; ++u) count += montgomery_solutions_at(qr, d, u);
  return count;
}

u64 count_product_curve(const QrTable& qr, u64 d) {
  const u64 p = qr.p();
  d %= p;
  u64 count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (i64 x = 0; x < static_cast<i64>(p); ++x)
    count += product_solutions_at(qr, d, static_cast<u64>(x));
  return count;
}

u64 count_product_curve(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  return count_product_curve(qr, d);
}

u64 count_product_curve_serial(u64 p, u64 d) {
  check_valid_d(p, d);
  QrTable qr(p);
  d %= p;
  u64 count = 0;
  for (u64 x = 0; x < p; ++x) count += product_solutions_at(qr, d, x);
  return count;
}

namespace {

// rank(y^2) -> sorted ranks of y, for every y in the field. One pass over
// the field; lets the listing oracles solve y^2 = t by lookup.
std::unordered_map<u64, std::vector<u64>> square_roots_by_rank(
    const std::vector<FieldElement>& elems) {
  std::unordered_map<u64, std::vector<u64>> roots;
  roots.reserve(elems.size());
  for (const FieldElement& y : elems)
    roots[(y * y).rank()].push_back(y.rank());
  for (auto& [sq, ys] : roots) std::sort(ys.begin(), ys.end());
  return roots;
}

}  // namespace

std::vector<AffinePoint> enumerate_edwards(const EdwardsCurve& curve,
                                           u64 budget) {
  const Field& field = curve.field();
  std::vector<FieldElement> elems = field.enumerate(budget);
  auto roots = square_roots_by_rank(elems);

  const FieldElement one = field.one();
  std::vector<AffinePoint> points;
  for (const FieldElement& x : elems) {
    FieldElement x2 = x * x;
    FieldElement den = one - curve.d() * x2;
    if (den.is_zero()) continue;
    FieldElement t = (one - x2) / den;
    auto it = roots.find(t.rank());
    if (it == roots.end()) continue;
    for (u64 yrank : it->second)
      points.push_back(AffinePoint{x, field.element_at(yrank)});
  }
  return points;
}

std::vector<AffinePoint> enumerate_montgomery(const MontgomeryCurve& curve,
                                              u64 budget) {
  const Field& field = curve.field();
  std::vector<FieldElement> elems = field.enumerate(budget);
  auto roots = square_roots_by_rank(elems);

  std::vector<AffinePoint> points;
  for (const FieldElement& u : elems) {
    FieldElement t = curve.rhs(u);
    auto it = roots.find(t.rank());
    if (it == roots.end()) continue;
    for (u64 vrank : it->second)
      points.push_back(AffinePoint{u, field.element_at(vrank)});
  }
  return points;
}

}  // namespace edcount
