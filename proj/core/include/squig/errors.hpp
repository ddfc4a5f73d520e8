#ifndef SQUIG_ERRORS_HPP
#define SQUIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace squig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the region an operation is defined on. region() names
/// it ("Omega_n", "Sigma_n", "closed sector V_n", ...).
class DomainError : public Error {
 public:
  DomainError(std::string region, const std::string& what)
      : Error(what + " (outside " + region + ")"), region_(std::move(region)) {}
  const std::string& region() const noexcept { return region_; }

 private:
  std::string region_;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

/// Base for failures of the numeric machinery (exit code 4 in the CLI).
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The argument of 1 - z^n moved by pi/2 or more in one step; refine the path.
class BranchAmbiguityError : public NumericError {
 public:
  using NumericError::NumericError;
};

class QuadratureFailure : public NumericError {
 public:
  QuadratureFailure(const std::string& what, double previous, double last)
      : NumericError(what), previous_(previous), last_(last) {}
  /// Magnitudes of the last two level estimates.
  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

class DivergentIntegral : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceFailure : public NumericError {
 public:
  ConvergenceFailure(const std::string& what, double residual)
      : NumericError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class InvalidSeries : public Error {
 public:
  using Error::Error;
};

/// winding_number: a loop sample coincides with the target.
class DegenerateLoop : public NumericError {
 public:
  using NumericError::NumericError;
};

/// winding_number: an argument increment reached pi; the loop needs more samples.
class RefinementNeeded : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace squig

#endif  // SQUIG_ERRORS_HPP
