#pragma once

#include <stdexcept>
#include <string>

namespace dyncomm {

/// Bad run configuration (flags, specs, parameter ranges). CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (files, batches, streams). CLI exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dyncomm
