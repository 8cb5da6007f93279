// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/modular.hpp"

#include "edcount/errors.hpp"

namespace edcount {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DomainError("inverse of zero modulo " + std::to_string(p));
  // Fermat; p is prime in every call site.
  return pow_mod(a, p - 2, p);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality for all 64-bit integers.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

void require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p))
    throw DomainError(std::to_string(p) + " is not an odd prime");
}

int legendre(u64 a, u64 p) {
  require_odd_prime(p);
  a %= p;
  if (a == 0) return 0;
  u64 e = pow_mod(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::optional<std::pair<u64, u64>> sqrt_mod(u64 a, u64 p) {
  require_odd_prime(p);
  a %= p;
  if (a == 0) return std::make_pair(u64{0}, u64{0});
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks. Write p-1 = q * 2^s with q odd.
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      u64 t2 = t;
      u64 i = 0;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = pow_mod(c, u64{1} << (m - i - 1), p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
  }
  u64 other = p - r;
  if (r > other) std::swap(r, other);
  return std::make_pair(r, other);
}

u64 power_sum(u64 p, u64 k) {
  require_odd_prime(p);
  return (k % (p - 1) == 0) ? p - 1 : 0;
}

std::vector<u64> inverse_table(u64 n, u64 p) {
  std::vector<u64> inv(n + 1, 0);
  if (n >= 1) inv[1] = 1;
  for (u64 i = 2; i <= n; ++i)
    inv[i] = mul_mod(p - p / i, inv[p % i], p);
  return inv;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi && n >= lo; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

u64 checked_pow(u64 p, unsigned n) {
  u64 result = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (result > UINT64_MAX / p)
      throw DomainError("field order overflows 64 bits");
    result *= p;
  }
  return result;
}

}  // namespace edcount
