// Error taxonomy. Precondition violations and resource-cap failures are
// distinct classes because the CLI maps them to different exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace quotkit {

// A caller violated a documented precondition (exit code 3 in the CLI).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficientError : PreconditionError {
  explicit RankDeficientError(const std::string& what) : PreconditionError(what) {}
};

struct OutsideOverlapError : PreconditionError {
  explicit OutsideOverlapError(const std::string& what) : PreconditionError(what) {}
};

struct DegreeTooHighError : PreconditionError {
  explicit DegreeTooHighError(const std::string& what) : PreconditionError(what) {}
};

struct RegularityTooLowError : PreconditionError {
  explicit RegularityTooLowError(const std::string& what) : PreconditionError(what) {}
};

// A configurable resource cap was hit before an algorithm could certify its
// answer (exit code 4 in the CLI).
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

struct StabilizationFailureError : ResourceCapError {
  explicit StabilizationFailureError(const std::string& what) : ResourceCapError(what) {}
};

}  // namespace quotkit
