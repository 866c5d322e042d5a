#pragma once

#include <stdexcept>

namespace d2dcell {

// Numerical integration or series evaluation did not reach the requested
// tolerance within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The simulator could not activate every base station.
class SaturationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File or stream output failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace d2dcell
