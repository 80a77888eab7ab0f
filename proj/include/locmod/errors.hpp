#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locmod {

// Argument outside the documented range of an operation.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two objects that must agree in size (partition sizes, matrix shapes) do not.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Binary operation on polynomials/ideals from incompatible ring contexts.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix expected to be nilpotent is not.
class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Eigenvalue data whose entries collide in the target field.
class DistinctnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual polynomial / JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Common base for budget violations; carries the budget and the size of the
// work that was requested (or the point at which work was cut off).
class LimitError : public std::runtime_error {
 public:
  LimitError(const std::string& what, std::uint64_t budget, std::uint64_t reached)
      : std::runtime_error(what), budget(budget), reached(reached) {}
  std::uint64_t budget;
  std::uint64_t reached;
};

// A Groebner-basis computation exceeded its step/term budget.
class ResourceLimit : public LimitError {
 public:
  using LimitError::LimitError;
};

// An enumeration (subspaces, flags) would exceed its point budget.
class BudgetExceeded : public LimitError {
 public:
  using LimitError::LimitError;
};

}  // namespace locmod
