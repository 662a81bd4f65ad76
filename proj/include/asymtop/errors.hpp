#pragma once

#include <stdexcept>
#include <string>

namespace asymtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the region where an operation is defined
/// (|n| > j, θ too close to a pole, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two objects of different angular momentum were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The Lamé construction needs A > B > C strictly.
class DegenerateParamsError : public Error {
 public:
  using Error::Error;
};

/// Root counts of the Lamé classes do not add up to 2j+1.
class RootCountError : public Error {
 public:
  using Error::Error;
};

/// A Lamé series failed to terminate at the requested energy.
class NotTerminatingError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of a rational map.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// exp(i n q) would overflow for the requested imaginary part of q.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Invalid top parameters (ordering or positivity violated).
class ParamsError : public Error {
 public:
  using Error::Error;
};

}  // namespace asymtop
