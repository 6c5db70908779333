#pragma once

#include <stdexcept>
#include <string>

namespace lesionnet {

// Shape/size violations: mismatched extents, bad channel counts, overflow.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid NetworkConfig / TrainConfig / checkpoint-config mismatches.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation called in the wrong order (e.g. backward before forward).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

// File decode/encode and checkpoint payload failures.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lesionnet
