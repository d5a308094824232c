#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ranlase {

// Base class for all numerical failures raised by the solvers. Invalid
// arguments (malformed configs, out-of-range indices) use
// std::invalid_argument instead.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No stationary photon number exists: a mode with zero escape rate is
// pumped through a nonzero coupling row.
struct UnboundedSolutionError : SolverError {
  using SolverError::SolverError;
};

// Drift matrix has an eigenvalue at or above the marginality guard; the
// linearization has no stationary covariance there.
struct StabilityError : SolverError {
  StabilityError(const std::string& msg, std::complex<double> eigenvalue)
      : SolverError(msg), offending_eigenvalue(eigenvalue) {}
  std::complex<double> offending_eigenvalue;
};

// A pair sum of eigenvalues fell below the guard; the eigen-expansion
// denominator is not trustworthy.
struct SingularityError : SolverError {
  using SolverError::SolverError;
};

// Eigenvector matrix too ill-conditioned for the eigen-expansion;
// use CovarianceMethod::DirectLyapunov.
struct DefectiveSystemError : SolverError {
  using SolverError::SolverError;
};

// Jump-process simulation would need infeasibly many events or counts.
struct InfeasibleScaleError : SolverError {
  using SolverError::SolverError;
};

// Fano factor of a mode with zero mean photon number; report the mode as
// absent instead of defaulting to 1.
struct UndefinedFanoError : SolverError {
  using SolverError::SolverError;
};

// Not enough counting windows for a Fano estimate.
struct InsufficientDataError : SolverError {
  using SolverError::SolverError;
};

}  // namespace ranlase
