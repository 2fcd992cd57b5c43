#pragma once

#include <stdexcept>
#include <string>

namespace olspace {

/// Argument outside the mathematical domain of an operation (negative u, t beyond gamma, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation does not hold for the given input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed construction data (non-convex table, negative exponent, unknown key, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested operation has no rule for this kind of input.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative solver ran out of budget. best_value() is the best objective seen,
/// which for a minimization is still a valid upper bound.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

}  // namespace olspace
