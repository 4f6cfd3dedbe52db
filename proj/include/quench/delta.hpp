#pragma once

// Attractive Dirac delta well -gamma delta(x): single bound state
// phi_0 = sqrt(beta) e^{-beta|x|}, E_0 = -gamma^2 m / (2 hbar^2), plus
// even/odd continuum channels normalized to 2 pi delta(p - p').
// beta = m gamma / hbar^2; theta = hbar v / gamma (Massey parameter),
// so m v / hbar = theta * beta.

#include "quench/basis.hpp"
#include "quench/evolution.hpp"
#include "quench/types.hpp"

namespace quench::delta_well {

struct DeltaParams {
  double gamma = 1.0;
  double v = 0.0;
  UnitsConvention units;

  double beta() const { return units.mass * gamma / (units.hbar * units.hbar); }
  double theta() const { return units.hbar * v / gamma; }
  double bound_energy() const {
    return -gamma * gamma * units.mass / (2.0 * units.hbar * units.hbar);
  }
  static DeltaParams from_theta(double theta, double gamma = 1.0,
                                UnitsConvention units = {}) {
    DeltaParams p;
    p.gamma = gamma;
    p.units = units;
    p.v = theta * gamma / units.hbar;
    return p;
  }
  void validate() const {
    units.validate();
    if (!(gamma > 0.0)) throw std::invalid_argument("delta: gamma must be > 0");
  }
};

// Eigenbasis with channels "even" and "odd" on (0, k_max], k_max chosen so
// the skipped |P|^2 tail is below tail_budget (the L2 round-trip defect is
// its square root).
Eigenbasis delta_eigenmodes(const DeltaParams& params, double k_max = 0.0,
                            int k_points = 16384);

// Bound-survival amplitude Q11(theta) = 4 / (theta^2 + 4).
double q11(double theta);

// Continuum amplitudes exactly as printed: p1_even real, p1_odd purely
// imaginary; both vanish linearly in k.
double p1_even(double k, double theta, double beta);
complexd p1_odd(double k, double theta, double beta);

// Closed-form bound probability 16/(theta^2+4)^2 with the continuum obtained
// by adaptive quadrature of |P^(e)|^2 + |P^(o)|^2 over (0, inf); the closed
// complement is available as `continuum_closed`.
ProbabilityBudget delta_probabilities(double theta);
double continuum_closed(double theta);
double continuum_numeric(double theta,
                         numerics::QuadratureOptions opt = {1e-12, 1e-11});

// Decomposition of the static ground state over the moving basis, filled
// from the closed forms on the channel grids.
evolution::Decomposition delta_decomposition(const DeltaParams& params,
                                             double k_max = 0.0,
                                             int k_points = 16384);

// Default k_max heuristic for a given theta, beta (round-trip safe).
double default_k_max(double theta, double beta);

}  // namespace quench::delta_well
