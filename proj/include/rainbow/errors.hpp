#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Malformed or precondition-violating input. Maps to CLI exit code 3.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured search cap or time budget was exceeded. Maps to exit code 4.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed; always a defect, never bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace rainbow
