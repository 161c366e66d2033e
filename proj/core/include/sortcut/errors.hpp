#pragma once

#include <stdexcept>
#include <string>

namespace sortcut {

class SortCutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance failed the normalization preconditions.
class InvalidInstanceError : public SortCutError {
 public:
  using SortCutError::SortCutError;
};

/// The profile's underlying instance is not normalized, or the stated bids
/// violate the model constraints.
class UnnormalizedProfileError : public SortCutError {
 public:
  using SortCutError::SortCutError;
};

/// The demand never reaches the supply on the cut-point domain.
class NoClearingError : public SortCutError {
 public:
  using SortCutError::SortCutError;
};

}  // namespace sortcut
