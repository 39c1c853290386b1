#pragma once

#include <stdexcept>
#include <string>

namespace brokentoric {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input does not describe a polytope complex (degenerate cell, bad
/// intersection, malformed document).
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (dimension mismatch,
/// non-simple polytope where simplicity is required, unknown generator...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A self-check failed: d∘d ≠ 0, engines disagree, an identity that must hold
/// on valid input does not. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace brokentoric
