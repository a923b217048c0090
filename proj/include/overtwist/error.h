#pragma once

#include <stdexcept>
#include <string>

namespace overtwist {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed pattern or kneading text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Sequence is not a cyclic permutation of {1..n}, n >= 2.
class InvalidPattern : public Error {
 public:
  using Error::Error;
};

// Operation needs a convergent pattern (unique fixed point of the P-linear map).
class DivergentPattern : public Error {
 public:
  using Error::Error;
};

class NotUnimodal : public Error {
 public:
  using Error::Error;
};

// Over-rotation number outside (0, 1/2) where the operation is defined.
class RhoOutOfRange : public Error {
 public:
  using Error::Error;
};

// Generator parameters violate a precondition (non-coprime, 2p >= q, k < 2, ...).
class BadParameters : public Error {
 public:
  using Error::Error;
};

class LoopNotInGraph : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed, or a construction broke an
// invariant it is supposed to guarantee. Always a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace overtwist
