#pragma once

#include <stdexcept>
#include <string>

namespace pinlab {

/// Requested operation is not defined for the given statistics.
class UnsupportedOperation : public std::logic_error {
 public:
  explicit UnsupportedOperation(const std::string& what) : std::logic_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A postcondition that should hold by construction failed; indicates a bug.
class InternalConsistencyError : public std::runtime_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural fact guaranteed by theory failed numerically; indicates a bug.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numerical procedure failed to converge.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A sampling problem has an empty feasible set (or the budget ran out).
class InfeasibilityError : public std::runtime_error {
 public:
  explicit InfeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pinlab
