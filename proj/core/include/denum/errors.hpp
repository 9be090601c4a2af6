#pragma once

#include <stdexcept>

namespace denum {

/// Base class for every error the library raises deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejected input: bad values, unparsable numbers, inconsistent overrides.
struct InvalidInputError : Error {
  using Error::Error;
};

/// A file could not be parsed; the message carries field/position context.
struct ParseError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

/// Parsed data failed a structural invariant (row counts, signs, checksums).
struct ValidationError : InvalidInputError {
  using InvalidInputError::InvalidInputError;
};

/// Work refused because it exceeds a configured budget or cap.
struct ResourceError : Error {
  using Error::Error;
};

/// Filesystem failure while reading or writing.
struct IoError : Error {
  using Error::Error;
};

}  // namespace denum
