#pragma once

#include <stdexcept>
#include <string>

namespace mgw {

/// Malformed input or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured resource cap. Raised instead of
/// returning a partial (and therefore possibly wrong) answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity or internal invariant failed. This always points at
/// a bug in the computation, never at the input.
class IdentityFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mgw
