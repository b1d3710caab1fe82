#pragma once

#include <stdexcept>
#include <string>

namespace kheight {

// Malformed arguments: bad dimensions, out-of-range values, wrong graph kind.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured raw-assignment cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A max-flow coupling could not route the full unit of mass.
class DominanceViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CFTP did not coalesce within the configured number of epochs.
class EpochCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kheight
