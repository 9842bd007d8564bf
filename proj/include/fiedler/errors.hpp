#pragma once

#include <stdexcept>
#include <string>

namespace fiedler {

// Error taxonomy. The CLI maps these onto exit codes:
//   InputError / ShapeError / SpecError -> 2
//   PreconditionError / DomainError     -> 3
//   anything else                       -> 1

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (file syntax, schema, unparsable rational).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between matrices and vectors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid join specification.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the requested route does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (zero polynomial roots, 1/0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace fiedler
