#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellcox {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class InhomogeneousGenerator : public Error {
 public:
  using Error::Error;
};

/// Computed data disagrees with the tabulated reference data.
class ReferenceMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NoCompatibleExponents : public Error {
 public:
  using Error::Error;
};

/// A genericity condition failed for the drawn coefficients; retry with another seed.
class DegenerateCoefficients : public Error {
 public:
  using Error::Error;
};

class NonPointedGrading : public Error {
 public:
  using Error::Error;
};

class TooManyVariables : public Error {
 public:
  using Error::Error;
};

class LineContainedInY : public Error {
 public:
  using Error::Error;
};

class IrrationalIntersection : public Error {
 public:
  using Error::Error;
};

class SingularPoint : public Error {
 public:
  using Error::Error;
};

class PointNotOnHypersurface : public Error {
 public:
  using Error::Error;
};

class InconsistentStarPattern : public Error {
 public:
  using Error::Error;
};

/// A restricted presentation does not have the shape of the one for n - 1.
class StructuralMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace ellcox
