#ifndef MONOCURVE_ERROR_HPP
#define MONOCURVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace monocurve {

/// Operands that do not fit together: variable-count mismatch, non-square
/// matrices, scalars from different fields.
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

/// A well-formed request that has no answer (leading monomial of zero,
/// length of a non-Artinian quotient, colon by the zero ideal).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Caller violated a documented precondition (index out of range,
/// gcd(d, m) != 1, inhomogeneous input to the Hilbert oracle).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A claim that must hold by construction failed. Raised by the colon
/// witness and the socle computation; never expected in practice.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace monocurve

#endif  // MONOCURVE_ERROR_HPP
