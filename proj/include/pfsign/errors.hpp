#pragma once

#include <stdexcept>

namespace pfsign {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown registry function or kernel name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sequence lengths or indices that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// f(1) = 0, so no Dirichlet inverse exists.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// f(1) is nonzero but not a unit, so the inverse is not integral.
class NonUnitLeadingValue : public Error {
 public:
  using Error::Error;
};

/// Power series whose constant term is not +1 or -1.
class NonUnitLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

/// Request exceeds an enumeration bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedKind : public Error {
 public:
  using Error::Error;
};

}  // namespace pfsign
