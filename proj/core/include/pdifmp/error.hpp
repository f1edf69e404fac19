#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdifmp {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coefficient function produced a non-finite value, or a model failed
// registration checks.
class ModelError : public Error {
 public:
  using Error::Error;
};

// sigma <= 0 where the Lamperti map must be evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A reweighting functional (gamma1, gamma2) went negative.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

// Bounds on the reweighting functionals could not be established.
class UnboundedFunctional : public Error {
 public:
  using Error::Error;
};

// Candidate FPT sampling needs a linear transformed threshold or a
// user-supplied candidate sampler.
class UnsupportedThreshold : public Error {
 public:
  using Error::Error;
};

// A rejection loop or jump recursion hit its cap.
class IterationLimit : public Error {
 public:
  using Error::Error;
};

// Invalid arguments or configuration values.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Wraps a per-sample failure inside a batch run.
class BatchError : public Error {
 public:
  BatchError(std::size_t index, const std::string& what)
      : Error("sample " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace pdifmp
