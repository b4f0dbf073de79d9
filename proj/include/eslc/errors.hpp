#pragma once

#include <stdexcept>
#include <string>

namespace eslc {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape or conformance violation: non-square matrix, mismatched vector
/// lengths, wrong channel count.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Invalid user-supplied data: bad config values, malformed files,
/// nonfinite controls, empty member lists.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Invalid scenario configuration (unknown preset, even sample counts, ...).
class ConfigError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// NaN or Inf surfaced inside the optimization loop. Carries the iteration
/// index at which the failure was detected.
class NumericalError : public Error {
  public:
    NumericalError(const std::string& what, long iteration)
        : Error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration) {}

    long iteration() const { return iteration_; }

  private:
    long iteration_;
};

}  // namespace eslc
