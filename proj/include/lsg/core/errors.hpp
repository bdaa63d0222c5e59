#pragma once

#include <stdexcept>
#include <string>

namespace lsg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Iterative procedure failed to converge or produced non-finite output.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at or inside a singular point or excised region.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested level is not attained by the field.
class EmptyLevelError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Level set could not be parameterized by the chosen backend.
class ExtractionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Surface carries no usable weight (empty, or |Du| vanishes on it).
class DegenerateSurfaceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace lsg
