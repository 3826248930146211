#pragma once

#include <stdexcept>
#include <string>

namespace shortroots {

// Bad input: unknown family, wrong rank, non-root vector, non-dominant weight.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because it would exceed a configured size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independently computed quantities that must agree did not.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested operation is not defined for this root system type.
class UnsupportedType : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace shortroots
