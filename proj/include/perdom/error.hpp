#pragma once

#include <stdexcept>
#include <string>

namespace perdom {

// Rejected input: precondition violated, malformed data, unsupported parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force search would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point evaluation hit a singular or boundary configuration.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace perdom
