// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stochcond {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distribution parameters outside their domain (sd <= 0, p > 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Inputs that cannot form a valid object, e.g. non-monotone quantiles.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Exact evaluation requested for a distribution without finite support.
class UnsupportedExactError : public Error {
 public:
  using Error::Error;
};

class NotSamplableError : public Error {
 public:
  using Error::Error;
};

class NotDifferentiableError : public Error {
 public:
  using Error::Error;
};

// Bias adjustment needs a variance estimate, hence at least two draws.
class InsufficientSamplesError : public Error {
 public:
  using Error::Error;
};

class DegenerateProposalError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::size_t iteration)
      : Error(what + " at iteration " + std::to_string(iteration)),
        iteration_(iteration) {}
  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t iteration_;
};

class StepCapError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace stochcond
