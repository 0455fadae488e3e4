#pragma once

#include <stdexcept>
#include <string>

namespace vsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with an input file: unreadable, malformed, or inconsistent.
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// A coordinate or neighbor id outside the declared dimension.
class IndexError : public InputError {
 public:
  using InputError::InputError;
};

// An edge listed by only one of its endpoints.
class AsymmetryError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Sum bounds that no vector in the box can satisfy.
class InfeasibleBounds : public Error {
 public:
  using Error::Error;
};

// No vertex separator satisfies the balance bounds.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Orthogonality repair would push both sides below their lower bounds, or
// the fractional cleanup could not find a nondecreasing feasible move.
class DegenerateRepair : public Error {
 public:
  using Error::Error;
};

class NotBinary : public Error {
 public:
  using Error::Error;
};

class NotOrthogonal : public Error {
 public:
  using Error::Error;
};

// A point that breaks the box or sum constraints where feasibility is required.
class InfeasiblePoint : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace vsp
