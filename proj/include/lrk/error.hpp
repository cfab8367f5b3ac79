#pragma once

#include <stdexcept>
#include <string>

namespace lrk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partition does not fit the requested ambient rectangle, or a
/// partition/shape is malformed.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Boundary construction violated the ambient constraint of a puzzle mode.
class AmbientError : public Error {
 public:
  using Error::Error;
};

/// A rule was asked to work on an unsupported shape or tableau kind.
class RuleError : public Error {
 public:
  using Error::Error;
};

/// A count no longer fits in 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A puzzle does not have the structure an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A tableau failed the preconditions of a bijection.
class InvalidTableauError : public Error {
 public:
  using Error::Error;
};

/// Input (usually text or a genomic tableau) is not well formed.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// Symmetric-function expansion failed.
class ExpansionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrk
