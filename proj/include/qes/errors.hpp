#pragma once

#include <stdexcept>
#include <string>

namespace qes {

// Base class for all library failures; the CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input files (CLI exit 2).
struct InputError : Error {
  using Error::Error;
};

// Configured resource cap exceeded, e.g. exact polynomial degree (CLI exit 3).
struct ResourceLimit : Error {
  using Error::Error;
};

// Numeric failures (CLI exit 3).
struct NumericError : Error {
  using Error::Error;
};

struct NotOnLocus : NumericError {
  using NumericError::NumericError;
};
struct Degenerate : NumericError {
  using NumericError::NumericError;
};
struct NonConvergence : NumericError {
  using NumericError::NumericError;
};
struct AmbiguousClassification : NumericError {
  using NumericError::NumericError;
};
struct SeedBelowThreshold : NumericError {
  using NumericError::NumericError;
};
struct StepCollapse : NumericError {
  using NumericError::NumericError;
};
struct ClassificationJump : NumericError {
  using NumericError::NumericError;
};
struct WindowTooSmall : NumericError {
  using NumericError::NumericError;
};
struct InvalidEnd : InputError {
  using InputError::InputError;
};
struct InvalidM : InputError {
  using InputError::InputError;
};
struct NoMatch : NumericError {
  using NumericError::NumericError;
};
struct BranchTooShort : NumericError {
  using NumericError::NumericError;
};
struct RTooSmall : NumericError {
  using NumericError::NumericError;
};
struct PathThroughZero : NumericError {
  using NumericError::NumericError;
};
struct NoStabilization : NumericError {
  using NumericError::NumericError;
};
struct MonotonicityViolation : NumericError {
  using NumericError::NumericError;
};
struct GridNearSingularity : NumericError {
  using NumericError::NumericError;
};

}  // namespace qes
