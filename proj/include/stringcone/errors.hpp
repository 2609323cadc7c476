#pragma once

#include <stdexcept>
#include <string>

namespace stringcone {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input or a violated operation precondition.
struct invalid_input : error {
  explicit invalid_input(const std::string& what) : error(what) {}
};

// An identity that must hold under the selected sign/direction conventions
// failed; indicates a convention bug, not bad input.
struct convention_violation : error {
  explicit convention_violation(const std::string& what) : error(what) {}
};

// A configurable resource cap was exceeded.
struct limit_exceeded : error {
  explicit limit_exceeded(const std::string& what) : error(what) {}
};

// Exact division left a nonzero remainder.
struct not_divisible : error {
  explicit not_divisible(const std::string& what) : error(what) {}
};

}  // namespace stringcone
