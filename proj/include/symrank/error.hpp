#pragma once

#include <stdexcept>
#include <string>

namespace symrank {

// Malformed user input: bad shapes, non-finite values, unknown names.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid objects (unbalanced groups, overlapping partitions).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work or memory exceeds a configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symrank
