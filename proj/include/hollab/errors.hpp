#pragma once

#include <stdexcept>
#include <string>

namespace hollab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (degree mismatch, non-prime p, ...).
class InputError : public Error {
public:
  using Error::Error;
};

/// A configured size bound was exceeded; the computation was not attempted.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// A mathematical check that is expected to hold failed.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace hollab
