#pragma once

#include <stdexcept>
#include <string>

namespace glinfo {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a pole (gamma at nonpositive integers, hypergeometric c, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Coherence length diverges at or above the critical temperature.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Iterative procedure (quadrature, series, Newton) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid materials input.
class MaterialsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace glinfo
