#pragma once

#include <stdexcept>
#include <string>

namespace unclab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite endpoints, unsorted samples, bad JSON payloads.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

// Geometry that cannot be realized (e.g. r disjoint parts do not fit).
class InfeasibleRequestError : public Error {
 public:
  using Error::Error;
};

// A checker was invoked outside the hypothesis of the claim it checks.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Zero polynomial / zero spectrum where a nonzero object is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Factorial (or similar) guard on an exhaustive oracle.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Iterative solver hit its cap; carries the best residual reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double best_residual)
      : Error(msg), best_residual(best_residual) {}
  double best_residual;
};

// Invalid campaign/experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace unclab
