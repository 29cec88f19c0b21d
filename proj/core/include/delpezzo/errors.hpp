#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated (off-surface point,
/// zero divisor, malformed text, mismatched extension contexts, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The input is valid but sits on a degenerate locus the operation cannot
/// handle (identically-zero discriminant, 2-torsion seed, singular point of W).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded the configured coefficient bit-size cap.
class BitCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal exact identity failed. Always an implementation bug.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace delpezzo
