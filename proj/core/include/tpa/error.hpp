#pragma once

#include <stdexcept>
#include <string>

namespace tpa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// A rational function has a pole at t = 0.
class Diverges : public Error {
public:
  explicit Diverges(const std::string& what = "limit at t = 0 diverges") : Error(what) {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  SingularMatrix() : Error("matrix is singular") {}
};

class SingularFamily : public Error {
public:
  SingularFamily() : Error("parametrized basis has zero determinant") {}
};

class NotALieAlgebra : public Error {
public:
  NotALieAlgebra() : Error("bracket is not anticommutative or fails the Jacobi identity") {}
};

class NotADerivation : public Error {
public:
  NotADerivation() : Error("matrix is not a derivation of the commutative product") {}
};

class UnknownId : public Error {
public:
  explicit UnknownId(const std::string& id) : Error("unknown catalog id: " + id) {}
};

class InadmissibleParameter : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace tpa
