#pragma once

#include <stdexcept>

namespace warmgray {

/// Raised when two images that must share dimensions do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the codecs for unreadable, unwritable, or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace warmgray
