#pragma once

#include <stdexcept>

namespace solenoid {

// Rejected inputs: mismatched chains, invalid meshes, bad preconditions.
// The CLI maps these to exit code 2.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Failures inside an iteration: non-convergence, stiff configurations,
// degenerate geometry. CLI exit code 1.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace solenoid
