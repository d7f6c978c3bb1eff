#pragma once

#include <stdexcept>
#include <string>

namespace resgrass {

/// Malformed or inconsistent user input (bad file, invalid flat, non-prime modulus).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition failed (division by zero, wrong grade, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace resgrass
