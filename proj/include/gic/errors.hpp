#pragma once

#include <stdexcept>
#include <string>

namespace gic {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid inputs: bad parameters, malformed specs, unusable sample sets.
/// The CLI maps these to exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called for a channel in the wrong interference regime.
class RegimeMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Differential quantities requested for a distribution without a density.
class DiscreteInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Divergence with supp(p) not contained in supp(q).
class SupportError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical integration failed to reach the requested agreement.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// A transport map was evaluated outside its tabulated range.
class MapRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The triangular map violates its construction invariants (e.g. a
/// non-positive Jacobian diagonal), which indicates a bug or an input
/// outside the construction's hypotheses.
class MapConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gic
