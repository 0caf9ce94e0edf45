#pragma once

#include <stdexcept>
#include <string>

namespace semspace {

// Library code throws; the CLI maps exception type to process exit code.
enum class ExitCode : int { ok = 0, config = 2, data = 3, numeric = 4 };

// Bad flags, malformed config files, inconsistent options.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable/malformed input data, invariant violations on load,
// mismatched vocabularies or row ids.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solver failures, non-finite values appearing mid-computation.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semspace
