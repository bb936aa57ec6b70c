#pragma once

#include <stdexcept>
#include <string>

namespace semibounded {

/// Operand sizes disagree (vector dimension, mode count, matrix shape).
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An input lies outside the domain of an operation: a nonpositive vector
/// field passed to chi, a matrix outside the symplectic cone, and so on.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative routine failed to converge or a budget was exceeded.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace semibounded
