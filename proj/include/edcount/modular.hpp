// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_MODULAR_HPP_
#define EDCOUNT_MODULAR_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace edcount {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Inverse of a modulo the odd prime p. Throws DomainError when p | a.
u64 inv_mod(u64 a, u64 p);

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

// Checks that p is an odd prime, i.e. a valid field characteristic here.
void require_odd_prime(u64 p);

// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion.
// p must be an odd prime.
int legendre(u64 a, u64 p);

// Square roots of a modulo an odd prime p. Returns both roots {r, p-r}
// (just {0} for a = 0) or nothing when a is a non-residue. Uses the
// a^((p+1)/4) shortcut for p = 3 (mod 4) and Tonelli-Shanks otherwise.
std::optional<std::pair<u64, u64>> sqrt_mod(u64 a, u64 p);

// Value of sum_{x=1}^{p-1} x^k mod p: p-1 when (p-1) | k, else 0.
u64 power_sum(u64 p, u64 k);

// inv[i] for i in [1, n], n < p. Index 0 unused.
std::vector<u64> inverse_table(u64 n, u64 p);

// All primes in [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

// p^n, throwing DomainError on 64-bit overflow.
u64 checked_pow(u64 p, unsigned n);

}  // namespace edcount

#endif  // EDCOUNT_MODULAR_HPP_
