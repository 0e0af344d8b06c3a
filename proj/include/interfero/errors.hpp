#pragma once

#include <stdexcept>
#include <string>

namespace interfero {

/// Base for every mathematical precondition failure raised by the library.
/// The CLI maps it to the domain-error exit code.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed quantity that should be a probability fell outside [0, 1].
class NotAProbability : public DomainError {
 public:
  NotAProbability(const std::string& what_for, double raw)
      : DomainError(what_for + ": value " + format(raw) + " is not in [0, 1]"), raw_(raw) {}

  /// Preformatted message; raw is the first offending value.
  NotAProbability(double raw, const std::string& message) : DomainError(message), raw_(raw) {}

  double raw_value() const noexcept { return raw_; }

  static std::string format(double v);

 private:
  double raw_;
};

/// lambda is undefined because one of the alternatives has probability zero.
class DegenerateContext : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Element outside the invertible cone G+* (|z|^2 <= 0).
class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result not representable in double precision (e.g. cosh overflow).
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrimeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Priors or conditional rows do not form probability distributions.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidProfile : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace interfero
