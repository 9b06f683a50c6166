#pragma once

#include <stdexcept>
#include <string>

namespace hankelmonde {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (e.g. a.cols != b.rows in a product).
class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

/// A block or submatrix index lies outside the admissible range.
class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

/// The parameter tuple lies outside the region where a construction exists.
/// The message states the violated hypothesis in plain terms.
class CaseViolation : public Error {
  public:
    using Error::Error;
};

class NonSquare : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Malformed rational, polynomial or matrix text.
class ParseError : public Error {
  public:
    using Error::Error;
};

class UnknownFamily : public Error {
  public:
    using Error::Error;
};

} // namespace hankelmonde
