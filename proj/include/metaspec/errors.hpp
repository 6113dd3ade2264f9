#ifndef METASPEC_ERRORS_HPP_
#define METASPEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace metaspec {

// Failure categories, used by the CLI to pick an exit code:
//   ValidationError   -> malformed or inconsistent input        (exit 2)
//   PreconditionError -> input valid, math precondition unmet   (exit 3)
//   ConvergenceError  -> iteration budget exhausted             (exit 4)
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& what, double best_residual_)
      : Error(what), best_residual(best_residual_) {}
  double best_residual;
};

struct ShapeMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NotHermitian : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNormal : ValidationError {
  using ValidationError::ValidationError;
};
struct NotAntisymmetric : ValidationError {
  using ValidationError::ValidationError;
};
struct NotSymmetric : ValidationError {
  using ValidationError::ValidationError;
};
struct InconsistentExactData : ValidationError {
  using ValidationError::ValidationError;
};
struct AngleInconsistent : ValidationError {
  using ValidationError::ValidationError;
};

struct NotUnitary : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NotDiscrete : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NotDiscreteBelow : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct ZeroFrequency : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DimensionCap : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NoConvergence : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

// Carries the worst per-entry residual of the failed reconstruction.
struct ReconstructionFailed : Error {
  explicit ReconstructionFailed(const std::string& what, double worst_residual_)
      : Error(what), worst_residual(worst_residual_) {}
  double worst_residual;
};

// Interpolation self-checks; reaching these indicates a bug, not bad input.
struct NoExactFit : Error {
  using Error::Error;
};
struct InterpolationMismatch : Error {
  using Error::Error;
};

}  // namespace metaspec

#endif  // METASPEC_ERRORS_HPP_
