#pragma once

#include <stdexcept>
#include <string>

namespace crossings {

/// Malformed input: a documented precondition was violated.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid request that exceeds what the implementation or the
/// underlying theory supports (enumeration caps, inapplicable bounds).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crossings
