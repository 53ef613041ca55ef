#pragma once

#include <stdexcept>
#include <string>

namespace hyperjaya {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration (bounds, stopping rules, sizes).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A decomposition that cannot be built for the requested sizes.
class PlanError : public Error {
 public:
  using Error::Error;
};

/// Vector shorter than the objective's minimum number of variables.
class ArityError : public PlanError {
 public:
  using PlanError::PlanError;
};

/// Non-finite objective input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// API misuse: empty samples, missing baselines, out-of-range ids.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperjaya
