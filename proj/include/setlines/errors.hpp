#pragma once

#include <stdexcept>
#include <string>

namespace setlines {

// User-supplied data failed validation. CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An instance exceeds a solver's size cap. CLI maps this to exit code 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace setlines
