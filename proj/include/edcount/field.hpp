// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_FIELD_HPP_
#define EDCOUNT_FIELD_HPP_

#include <memory>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "edcount/errors.hpp"
#include "edcount/modular.hpp"

namespace edcount {

namespace detail {
struct FieldData {
  u64 p = 0;
  unsigned degree = 1;
  std::vector<u64> reduction_poly;  // monic, constant-term first; empty iff degree == 1
  u64 order = 0;                    // p^degree
};
}  // namespace detail

class FieldElement;

// Descriptor of F_p or F_{p^n}. Copies share immutable state and are cheap.
// Two descriptors compare equal when they have the same p, degree and
// reduction polynomial, regardless of how they were built.
class Field {
 public:
  static Field prime(u64 p);
  // F_{p^n} with the lexicographically smallest monic irreducible reduction
  // polynomial of degree n (coefficient vectors compared constant-term
  // first). For p = 3, n = 2 this picks x^2 + 1.
  static Field extension(u64 p, unsigned degree,
                         u64 budget = kDefaultEnumBudget);
  // F_{p^n} with an explicit reduction polynomial, validated monic and
  // irreducible. `monic_poly` is constant-term first of size degree+1.
  static Field extension_with_poly(u64 p, std::vector<u64> monic_poly);

  u64 characteristic() const { return data_->p; }
  unsigned degree() const { return data_->degree; }
  u64 order() const { return data_->order; }
  const std::vector<u64>& reduction_poly() const {
    return data_->reduction_poly;
  }

  FieldElement zero() const;
  FieldElement one() const;
  // Embeds a base-field residue (reduced mod p).
  FieldElement make(u64 value) const;
  // Element from coefficients, constant-term first; shorter vectors are
  // zero-padded, and every coefficient is reduced mod p.
  FieldElement make(const std::vector<u64>& coeffs) const;
  // Element of lexicographic rank k in [0, order). rank 0 is zero and the
  // constant term is the most significant digit, so ranks are ordered the
  // same way as coefficient vectors.
  FieldElement element_at(u64 rank) const;

  // All field elements in lexicographic coefficient order.
  std::vector<FieldElement> enumerate(u64 budget = kDefaultEnumBudget) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElement;
};

// Immutable element of a Field, stored as a canonical coefficient vector
// (constant-term first, every coefficient in [0, p)). Arithmetic between
// elements of different descriptors throws DomainError.
class FieldElement {
 public:
  const Field& field() const { return field_; }
  std::span<const u64> coeffs() const { return {c_.data(), c_.size()}; }
  // Constant coefficient; the full value for degree-1 fields.
  u64 residue() const { return c_[0]; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;

  FieldElement pow(u64 exp) const;
  FieldElement inverse() const;

  // Lexicographic rank among all field elements.
  u64 rank() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
  // Lexicographic coefficient order; both operands must share a field.
  bool operator<(const FieldElement& rhs) const;

 private:
  using Coeffs = boost::container::small_vector<u64, 3>;

  FieldElement(Field field, Coeffs c)
      : field_(std::move(field)), c_(std::move(c)) {}

  void check_same_field(const FieldElement& rhs) const;

  Field field_;
  Coeffs c_;
  friend class Field;
};

}  // namespace edcount

#endif  // EDCOUNT_FIELD_HPP_
