#pragma once

#include <stdexcept>
#include <string>

namespace bipcon {

/// Input outside the mathematical domain of an operation (negative counts,
/// non-finite rates, p outside [0,1]).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// p = 0 or p = 1 passed to a formula that divides by 1 - (1-p)^n.
class DegenerateParameterError : public DomainError {
 public:
  explicit DegenerateParameterError(const std::string& what)
      : DomainError(what) {}
};

/// Problem size beyond an enumeration or lattice budget.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

}  // namespace bipcon
