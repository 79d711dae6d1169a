#pragma once

#include <stdexcept>
#include <string>

namespace ntarp {

// Invalid parameters or configuration. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or missing input data. The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer result outside the representable range.
class RangeError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace ntarp
