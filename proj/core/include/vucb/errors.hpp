#pragma once

#include <stdexcept>
#include <string>

namespace vucb {

// All library errors derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGroup : Error { using Error::Error; };
struct ZeroCount : Error { using Error::Error; };
struct InvalidBenchmark : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct HorizonExceeded : Error { using Error::Error; };
struct HorizonTooSmall : Error { using Error::Error; };
struct DegenerateTarget : Error { using Error::Error; };
struct WidthInfinite : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct MissingParameter : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace vucb
