#pragma once

#include <stdexcept>
#include <string>

namespace ecc_spectra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSequence : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// QL iteration budget exhausted. Never expected for symmetric input.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Floating-point and exact zero counts disagree; the inertia is not certified.
class InertiaAmbiguous : public Error {
 public:
  using Error::Error;
};

/// Raised by closed-form builders when the sequence is not C(a1..a2k), k >= 2, a2k >= 2.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

class NonIntegerAverage : public Error {
 public:
  using Error::Error;
};

}  // namespace ecc_spectra
