// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "edcount/field.hpp"

#include <algorithm>
#include <string>

namespace edcount {

namespace {

// --- dense polynomial arithmetic over F_p, constant-term first ---

using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return out;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_rem(Poly f, const Poly& m, u64 p) {
  trim(f);
  const size_t dm = m.size() - 1;
  while (f.size() > dm) {
    u64 lead = f.back();
    size_t shift = f.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i < dm; ++i) {
        u64 sub = mul_mod(lead, m[i], p);
        u64& tgt = f[shift + i];
        tgt = (tgt + p - sub) % p;
      }
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  return poly_rem(poly_mul(a, b, p), m, p);
}

// f^(p^k) mod m via k successive p-th powers.
Poly poly_frobenius_iter(Poly f, unsigned k, const Poly& m, u64 p) {
  for (unsigned i = 0; i < k; ++i) {
    Poly result{1};
    Poly base = f;
    u64 e = p;
    while (e > 0) {
      if (e & 1) result = poly_mul_mod(result, base, m, p);
      base = poly_mul_mod(base, base, m, p);
      e >>= 1;
    }
    f = std::move(result);
  }
  return f;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = a;
    // reduce r modulo b (b need not be monic; normalize first)
    u64 lead_inv = inv_mod(b.back(), p);
    Poly bm = b;
    for (u64& c : bm) c = mul_mod(c, lead_inv, p);
    r = poly_rem(std::move(r), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: monic f of degree n is irreducible over F_p iff
// x^(p^n) = x (mod f) and gcd(x^(p^(n/q)) - x, f) = 1 for each prime q | n.
bool is_irreducible(const Poly& f, u64 p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  if (f[0] == 0) return n == 1;  // divisible by x
  const Poly x{0, 1};

  Poly xpn = poly_frobenius_iter(x, n, f, p);
  Poly diff = xpn;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;

  std::vector<unsigned> prime_divisors;
  unsigned m = n;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_divisors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_divisors.push_back(m);

  for (unsigned q : prime_divisors) {
    Poly xpk = poly_frobenius_iter(x, n / q, f, p);
    Poly d = xpk;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Poly g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Extended Euclid over F_p[x]: the inverse of a modulo the monic m.
Poly poly_inverse(const Poly& a, const Poly& m, u64 p) {
  Poly r0 = m, r1 = a;
  trim(r1);
  if (r1.empty()) throw DomainError("division by zero field element");
  Poly t0, t1{1};
  while (!r1.empty()) {
    // divide r0 by r1
    u64 lead_inv = inv_mod(r1.back(), p);
    Poly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    Poly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size() && !rem.empty()) {
      size_t shift = rem.size() - r1.size();
      u64 factor = mul_mod(rem.back(), lead_inv, p);
      q[shift] = factor;
      for (size_t i = 0; i < r1.size(); ++i) {
        u64 sub = mul_mod(factor, r1[i], p);
        u64& tgt = rem[shift + i];
        tgt = (tgt + p - sub) % p;
      }
      trim(rem);
    }
    trim(q);
    Poly t2 = t0;  // t0 - q*t1
    Poly qt = poly_mul(q, t1, p);
    if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
    for (size_t i = 0; i < qt.size(); ++i) t2[i] = (t2[i] + p - qt[i]) % p;
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant (m irreducible, a nonzero).
  u64 scale = inv_mod(r0[0], p);
  for (u64& c : t0) c = mul_mod(c, scale, p);
  return t0;
}

}  // namespace

Field Field::prime(u64 p) {
  require_odd_prime(p);
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->degree = 1;
  data->order = p;
  return Field(std::move(data));
}

Field Field::extension(u64 p, unsigned degree, u64 budget) {
  require_odd_prime(p);
  if (degree == 0) throw DomainError("extension degree must be >= 1");
  if (degree == 1) return prime(p);
  u64 order = checked_pow(p, degree);
  if (order > budget)
    throw BudgetExceededError("field order " + std::to_string(order) +
                              " exceeds enumeration budget " +
                              std::to_string(budget));
  // Walk monic degree-n polynomials in lexicographic coefficient order
  // (constant term most significant) until one is irreducible.
  for (u64 k = 0; k < order; ++k) {
    Poly f(degree + 1, 0);
    f[degree] = 1;
    u64 v = k;
    for (unsigned i = degree; i-- > 0;) {
      f[i] = v % p;  // i = degree-1 varies fastest
      v /= p;
    }
    if (is_irreducible(f, p)) return extension_with_poly(p, f);
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

Field Field::extension_with_poly(u64 p, std::vector<u64> monic_poly) {
  require_odd_prime(p);
  if (monic_poly.size() < 3)
    throw DomainError("reduction polynomial must have degree >= 2");
  for (u64& c : monic_poly) c %= p;
  if (monic_poly.back() != 1)
    throw DomainError("reduction polynomial must be monic");
  if (!is_irreducible(monic_poly, p))
    throw DomainError("reduction polynomial is reducible");
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->degree = static_cast<unsigned>(monic_poly.size() - 1);
  data->order = checked_pow(p, data->degree);
  data->reduction_poly = std::move(monic_poly);
  return Field(std::move(data));
}

FieldElement Field::zero() const {
  return FieldElement(*this, FieldElement::Coeffs(data_->degree, 0));
}

FieldElement Field::one() const { return make(u64{1}); }

FieldElement Field::make(u64 value) const {
  FieldElement::Coeffs c(data_->degree, 0);
  c[0] = value % data_->p;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::make(const std::vector<u64>& coeffs) const {
  if (coeffs.size() > data_->degree)
    throw DomainError("coefficient vector longer than field degree");
  FieldElement::Coeffs c(data_->degree, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % data_->p;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::element_at(u64 rank) const {
  if (rank >= data_->order) throw DomainError("element rank out of range");
  FieldElement::Coeffs c(data_->degree, 0);
  for (unsigned i = data_->degree; i-- > 0;) {
    c[i] = rank % data_->p;
    rank /= data_->p;
  }
  return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> Field::enumerate(u64 budget) const {
  if (data_->order > budget)
    throw BudgetExceededError("field order " + std::to_string(data_->order) +
                              " exceeds enumeration budget " +
                              std::to_string(budget));
  std::vector<FieldElement> out;
  out.reserve(data_->order);
  for (u64 k = 0; k < data_->order; ++k) out.push_back(element_at(k));
  return out;
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->degree == other.data_->degree &&
         data_->reduction_poly == other.data_->reduction_poly;
}

// --- FieldElement ---

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_)
    throw DomainError("operands belong to different field descriptors");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  const u64 p = field_.characteristic();
  Coeffs out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + rhs.c_[i]) % p;
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  const u64 p = field_.characteristic();
  Coeffs out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + p - rhs.c_[i]) % p;
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  const u64 p = field_.characteristic();
  const unsigned n = field_.degree();
  if (n == 1) {
    Coeffs out(1);
    out[0] = mul_mod(c_[0], rhs.c_[0], p);
    return FieldElement(field_, std::move(out));
  }
  std::vector<u64> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j)
      prod[i + j] = (prod[i + j] + mul_mod(c_[i], rhs.c_[j], p)) % p;
  }
  const auto& m = field_.reduction_poly();
  for (unsigned k = 2 * n - 2; k >= n; --k) {
    u64 lead = prod[k];
    if (lead != 0) {
      for (unsigned i = 0; i < n; ++i) {
        u64 sub = mul_mod(lead, m[i], p);
        u64& tgt = prod[k - n + i];
        tgt = (tgt + p - sub) % p;
      }
    }
  }
  Coeffs out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = prod[i];
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  return *this * rhs.inverse();
}

FieldElement FieldElement::operator-() const {
  const u64 p = field_.characteristic();
  Coeffs out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = (p - c_[i]) % p;
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(u64 exp) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exp > 0) {
    if (exp & 1) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  const u64 p = field_.characteristic();
  if (field_.degree() == 1) {
    Coeffs out(1);
    out[0] = inv_mod(c_[0], p);
    return FieldElement(field_, std::move(out));
  }
  std::vector<u64> a(c_.begin(), c_.end());
  std::vector<u64> inv = poly_inverse(a, field_.reduction_poly(), p);
  Coeffs out(field_.degree(), 0);
  for (size_t i = 0; i < inv.size(); ++i) out[i] = inv[i];
  return FieldElement(field_, std::move(out));
}

u64 FieldElement::rank() const {
  const u64 p = field_.characteristic();
  u64 r = 0;
  for (u64 c : c_) r = r * p + c;
  return r;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  check_same_field(rhs);
  return std::equal(c_.begin(), c_.end(), rhs.c_.begin());
}

bool FieldElement::operator<(const FieldElement& rhs) const {
  check_same_field(rhs);
  return std::lexicographical_compare(c_.begin(), c_.end(), rhs.c_.begin(),
                                      rhs.c_.end());
}

}  // namespace edcount
