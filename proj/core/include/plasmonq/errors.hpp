#pragma once

#include <stdexcept>
#include <string>

namespace plasmonq {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside its legal range (probabilities, angles, weights).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A state, element, and mode list do not agree on dimension or labels.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

/// A requested element would amplify: largest singular value above one.
class Unphysical : public Error {
 public:
  using Error::Error;
};

/// A counting estimator received unusable data (e.g. an empty setting).
class EstimatorError : public Error {
 public:
  using Error::Error;
};

/// A run configuration failed to parse or validate.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace plasmonq
