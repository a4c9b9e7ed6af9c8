#pragma once

#include <stdexcept>
#include <string>

namespace fedspeech {

// Malformed container or file contents (bad magic, truncation, bad CSV row).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recognized but unsupported encoding or version.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration value.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/layer shape disagreement.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values where finite ones are required (e.g. NaN gradients).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No valid client partition could be produced.
struct PartitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A command is missing one of its input artifacts.
struct DependencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fedspeech
