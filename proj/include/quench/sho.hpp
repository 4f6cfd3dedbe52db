#pragma once

// Suddenly moving harmonic oscillator.  kappa = m v^2 / (2 hbar omega) is the
// well's kinetic energy in units of hbar omega; the spectrum is purely
// discrete and the ground-state amplitudes follow the ladder recursion
//   Q_{0,n} = -i sqrt(kappa/n) Q_{0,n-1},   Q_{0,0} = e^{-kappa/2},
// i.e. Q_{0,n} = (-i)^n e^{-kappa/2} kappa^{n/2} / sqrt(n!), a Poisson
// distribution |Q_{0,n}|^2 with mean kappa.

#include "quench/basis.hpp"
#include "quench/evolution.hpp"
#include "quench/types.hpp"

namespace quench::sho {

struct SHOParams {
  double omega = 1.0;
  double kappa = 0.0;
  int n_max = 40;
  UnitsConvention units;

  double v() const {
    return std::sqrt(2.0 * kappa * units.hbar * omega / units.mass);
  }
  void validate() const {
    units.validate();
    if (!(omega > 0.0)) throw std::invalid_argument("sho: omega must be > 0");
    if (kappa < 0.0) throw std::invalid_argument("sho: kappa must be >= 0");
    if (n_max < 1) throw std::invalid_argument("sho: n_max must be >= 1");
  }
};

inline constexpr double kTailTol = 1e-12;

complexd sho_amplitude(int n, double kappa);

// Poisson spectrum up to n_max; total = 1 - analytic tail.  Throws
// TruncationError (with the n_max that would work) if the tail exceeds
// tail_tol.
ProbabilityBudget sho_probability_spectrum(double kappa, int n_max,
                                           double tail_tol = kTailTol);

// Smallest n_max whose Poisson tail is below tail_tol.
int required_n_max(double kappa, double tail_tol = kTailTol);

struct ResonanceCheck {
  double argmax_kappa;     // location of max_kappa |Q_{0,n}|^2
  double equality_defect;  // | |Q_{0,n}(n)|^2 - |Q_{0,n-1}(n)|^2 |
};
ResonanceCheck sho_resonance_check(int n);

// Hermite-function eigenbasis (no continuum channels).
Eigenbasis sho_eigenmodes(const SHOParams& params);

// Closed-form decomposition of the ground state over the moving basis.
evolution::Decomposition sho_decomposition(const SHOParams& params);

}  // namespace quench::sho
