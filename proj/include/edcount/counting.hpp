// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_COUNTING_HPP_
#define EDCOUNT_COUNTING_HPP_

#include <string>
#include <utility>

#include "edcount/enumerate.hpp"
#include "edcount/modular.hpp"

namespace edcount {

enum class CountMethod {
  kEnumeration,
  kCongruenceParity,
  kSupersingularFormula,
  kExtensionFormula,
};

const char* to_string(CountMethod method);
CountMethod count_method_from_string(const std::string& name);

// Everything the counting machinery knows about one curve E_d over F_{p^n}.
// trace_T is the deviation of the projective count from p^n + 1; it always
// satisfies trace_T^2 <= 4 p^n and vanishes exactly in the supersingular
// case. criterion_residue and legendre_d refer to d as a base-field residue.
struct CountReport {
  u64 p = 0;
  unsigned n = 1;
  u64 d = 0;
  u64 affine_count = 0;
  u64 projective_count = 0;
  int legendre_d = 0;
  u64 criterion_residue = 0;
  i64 trace_T = 0;
  bool supersingular = false;
  CountMethod method = CountMethod::kEnumeration;

  bool operator==(const CountReport&) const = default;
};

// sum_{j=0}^{(p-1)/2} binom((p-1)/2, j)^2 d^j mod p. The binomials are
// produced by the multiplicative recurrence with a batch inverse table, so
// nothing ever leaves word range.
u64 criterion_sum(u64 p, u64 d);

// True iff p = 3 (mod 4) and the criterion sum vanishes. Those two
// conditions together are equivalent to E_d being supersingular.
bool is_supersingular(u64 p, u64 d);

// (affine, projective) orders of a supersingular E_d over F_p:
// (p+1, p+1) when d is a non-residue, (p-3, p+1) when d is a residue.
// Throws DomainError on non-supersingular input.
std::pair<u64, u64> supersingular_order(u64 p, u64 d);

// The affine order of E_d mod p:
//   N = (-1)^((p+1)/2) * criterion_sum(p, d) - 1 - 2 (d/p)   (mod p),
// reduced into [0, p).
u64 order_congruence(u64 p, u64 d);

// The exact affine order, resolved without enumeration: the congruence
// pins N mod p, N lies in [4, 2p], and exactly one of the two lifts is
// even. The projective count is then checked against the Hasse window;
// a violation falls back to enumeration (within budget) or throws
// InconsistencyError.
CountReport resolve_exact_count(u64 p, u64 d, u64 budget = kDefaultEnumBudget);

// Ground-truth report from full enumeration over F_{p^n}.
CountReport enumeration_report(u64 p, unsigned n, u64 d,
                               u64 budget = kDefaultEnumBudget);

// Deviation of the enumerated affine count from p - 1 - 2 (d/p). Checks
// |T| <= 2 sqrt(p) and T = (-1)^((p+1)/2) * criterion_sum (mod p), and
// throws InconsistencyError if either fails.
i64 trace_from_oracle(u64 p, u64 d, u64 budget = kDefaultEnumBudget);

// (affine, projective) orders of a supersingular E_d over F_{p^n}:
//   n odd:  (p^n - 1 - 2 (d/p),            p^n + 1)
//   n even: (p^n - 3 - 2 (-p)^(n/2),       p^n + 1 - 2 (-p)^(n/2))
// Throws DomainError on non-supersingular input.
std::pair<u64, u64> extension_order(u64 p, unsigned n, u64 d);

// Report assembled from the closed-form routes: the supersingular order
// formula when it applies, resolve_exact_count otherwise for n = 1, and
// extension_order for supersingular n > 1. Non-supersingular extensions
// have no formula and raise DomainError.
CountReport formula_report(u64 p, unsigned n, u64 d,
                           u64 budget = kDefaultEnumBudget);

}  // namespace edcount

#endif  // EDCOUNT_COUNTING_HPP_
