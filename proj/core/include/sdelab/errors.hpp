#pragma once

#include <stdexcept>
#include <string>

namespace sdelab {

// Precondition / configuration violations. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Iterative solvers that fail to reach their tolerance. CLI exit code 4.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace sdelab
