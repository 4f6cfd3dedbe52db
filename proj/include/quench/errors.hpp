#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace quench {

// Numerical failure that still carries the best value obtained so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best,
                   double err, long evals)
      : std::runtime_error(what),
        best_estimate(best),
        error_estimate(err),
        evaluations(evals) {}

  std::complex<double> best_estimate;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Complex-power combination failed its pointwise realness check.
class BranchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// k-grid too coarse/short: t=0 round trip exceeded the reconstruction tolerance.
class ResolutionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wavefunction amplitude reached the edge of the propagation grid.
class DomainTooSmallError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested truncation cannot meet the tail tolerance; carries the fix.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required)
      : std::runtime_error(what), required_n_max(required) {}
  int required_n_max = 0;
};

}  // namespace quench
