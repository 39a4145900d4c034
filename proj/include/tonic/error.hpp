#pragma once

#include <stdexcept>
#include <string>

namespace tonic {

/// Malformed input: unknown names, collisions, out-of-range references.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-typed term or assertion.
class TypeError : public InputError {
 public:
  using InputError::InputError;
};

/// A finite construction would exceed its configured size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tonic
