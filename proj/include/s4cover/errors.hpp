#pragma once

#include <stdexcept>

namespace s4cover {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVector : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonUnitQuaternion : Error { using Error::Error; };
struct AllZero : Error { using Error::Error; };
struct DegenerateFiber : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct UnknownMap : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace s4cover
