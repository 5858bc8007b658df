#pragma once

#include <stdexcept>
#include <string>

namespace hardclust {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (shape mismatch, out-of-range index, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hardclust
