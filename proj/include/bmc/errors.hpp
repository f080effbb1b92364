#pragma once

#include <stdexcept>
#include <string>

namespace bmc {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad model parameters, out-of-range sizes, malformed
/// configuration. The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class BadRatios : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonPositiveEntry : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NotStochastic : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class RankDeficient : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class TooSmall : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ShapeMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class TooFewSamples : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class BudgetZero : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Requested dense or exhaustive computation beyond the supported size.
class DenseTooLarge : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class TooLarge : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Generic precondition violation not covered by a more specific class.
class InvalidArgument : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// NaN or Inf encountered during an iterative computation.
class NonFinite : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bmc
