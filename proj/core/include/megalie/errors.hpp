#pragma once

#include <stdexcept>
#include <string>

namespace megalie {

/// Operand sizes disagree (vector length, ambient dimension, matrix shape).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input does not have the structure an operation needs (labels, file layout).
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on a mathematical object failed (non-invertible map,
/// transformation whose inverse does not check out, truncation below minimum).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The expression leaves the supported class (e.g. a square root that cannot
/// be expressed through sqrt(1 - mu^2)).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace megalie
