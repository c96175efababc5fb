#pragma once

#include <stdexcept>
#include <string>

namespace drazin_lab {

/// Operand shapes are not conformable for the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonSquareError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// A matrix that must be inverted is numerically singular.
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The resolvent (A(I - AA^D)B^D + I) of the sum representation has no
/// numerical inverse.
class SingularResolventError : public SingularMatrixError {
 public:
  using SingularMatrixError::SingularMatrixError;
};

/// An operation's stated input equations do not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Wrong number of matrices for a hypothesis set.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generator could not produce an instance (bad dimension or repeated
/// degenerate draws).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed JSON input. `what()` carries the location and field path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drazin_lab
