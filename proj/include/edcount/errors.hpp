// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef EDCOUNT_ERRORS_HPP_
#define EDCOUNT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edcount {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A field or curve operation received arguments that violate its
// preconditions (composite modulus, d in {0,1}, mixed descriptors, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration was requested over a field larger than the configured cap.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// The unified Edwards addition hit a vanishing denominator. Only reachable
// when the curve coefficient is a square in the field.
class ExceptionalAdditionError : public Error {
 public:
  using Error::Error;
};

// A cross-check between two independent computation routes disagreed.
// Seeing this means either an implementation bug or a falsified identity,
// so it is never swallowed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Default cap on the number of field elements any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumBudget = 2'000'000;

}  // namespace edcount

#endif  // EDCOUNT_ERRORS_HPP_
