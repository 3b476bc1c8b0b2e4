#pragma once

#include <stdexcept>
#include <string>

namespace cgg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value is out of range or otherwise invalid.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A block was requested whose far-side count has the wrong parity for its
/// direction. Constructions never request such a block.
class InfeasibleBlockError : public Error {
 public:
  using Error::Error;
};

/// Two independent derivations of the same part of a construction disagree.
class ConstructionIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsupported graph document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersionError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace cgg
