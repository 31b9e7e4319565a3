#pragma once

#include <stdexcept>

namespace vbrick {

// Operands live on surfaces of different genus.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An identity the theory guarantees failed to hold (non-integral brick
// dimension, negative multiplicity, broken reassembly, ...). Reaching this
// means a bug, never bad user input.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The oracle's working precision cannot certify a rounding.
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vbrick
