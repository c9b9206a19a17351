#pragma once

#include <stdexcept>
#include <string>

namespace eqc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validation-type errors (bad input data); CLI exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// Resource-cap errors; CLI exit code 3.
struct CapExceeded : Error {
  using Error::Error;
};

struct OrderCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};
struct EnumerationCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

struct NotASubgroup : ValidationError {
  using ValidationError::ValidationError;
};
struct MixedSignature : ValidationError {
  using ValidationError::ValidationError;
};
struct DivisibilityViolation : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidWreathHom : ValidationError {
  using ValidationError::ValidationError;
};
struct ActionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NotCentralizing : ValidationError {
  using ValidationError::ValidationError;
};
struct GroupMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNormal : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNested : ValidationError {
  using ValidationError::ValidationError;
};
struct BadDecomposition : ValidationError {
  using ValidationError::ValidationError;
};
struct FaithfulnessHypothesisFails : ValidationError {
  using ValidationError::ValidationError;
};
struct FaithfulnessShadowFails : ValidationError {
  using ValidationError::ValidationError;
};
struct NotPairwiseNonConjugate : ValidationError {
  using ValidationError::ValidationError;
};
struct FaithfulnessFails : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace eqc
