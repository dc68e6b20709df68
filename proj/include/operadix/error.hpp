#pragma once

#include <stdexcept>
#include <string>

namespace operadix {

/// Base class for all engine errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects built over different palettes were combined.
class PaletteMismatchError : public Error {
 public:
  using Error::Error;
};

/// A grafting was attempted whose colours do not match. The tree layer
/// reports this error; the polynomial layer maps it to the zero polynomial.
class ColourMismatchError : public Error {
 public:
  using Error::Error;
};

/// The permutation supplied to a grafting is not a valid shuffle.
class InvalidShuffleError : public Error {
 public:
  using Error::Error;
};

/// An enumeration exceeded the configured resource cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace operadix
