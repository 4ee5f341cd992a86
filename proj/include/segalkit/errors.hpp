#pragma once

#include <stdexcept>
#include <string>

namespace segalkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition of morphisms whose ranks do not line up.
class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

/// A morphism value that violates its type invariants.
class InvalidMorphismError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: tables, JSON documents, morphism text.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A required precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Access to a rank outside the stored truncation, or mismatched truncations.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A word-length budget was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// A request beyond what the exhaustive machinery supports.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace segalkit
