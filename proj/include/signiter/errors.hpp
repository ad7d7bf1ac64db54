#pragma once

#include <stdexcept>
#include <string>

namespace signiter {

// Malformed text input (matrix files, rational strings, serialized specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact linear system that was expected to be nonsingular is not.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace signiter
