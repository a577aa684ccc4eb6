#pragma once

#include <stdexcept>
#include <string>

namespace bosent {

// Every failure raised by the library derives from Error. The subclasses
// separate malformed input (structural) from inputs that are well-formed but
// physically inadmissible, so callers such as the CLI can map them onto
// distinct exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: vectors of different lengths, empty spectra, bad sizes.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside the domain where it is defined.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The covariance is well formed but not symmetric (det alpha != det beta).
class UnsupportedStateError : public Error {
public:
  using Error::Error;
};

/// The covariance violates the uncertainty principle beyond tolerance.
class UnphysicalCovarianceError : public Error {
public:
  using Error::Error;
};

/// A physical quantity does not exist for the requested parameters, e.g. a
/// threshold temperature for a pair that is never entangled.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Internal cross-check failed (complex residue where a real value is
/// expected, two computation routes disagree).
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Requested workspace exceeds the configured guard.
class ResourceError : public Error {
public:
  using Error::Error;
};

} // namespace bosent
