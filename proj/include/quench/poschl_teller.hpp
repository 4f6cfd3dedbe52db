#pragma once

// Poschl-Teller wells V(x) = -hbar^2 lambda(lambda+1)/(2 a^2 m) sech^2(x/a),
// lambda integer: lambda bound states phi_j = N_j/sqrt(a) P_lambda^j(tanh(x/a))
// with E_j = -j^2 hbar^2/(2 a^2 m), and a reflectionless two-sided continuum.
// kappa = a m v / hbar.

#include <vector>

#include "quench/basis.hpp"
#include "quench/evolution.hpp"
#include "quench/types.hpp"

namespace quench::pt {

struct PTParams {
  int lambda = 1;
  double a = 1.0;
  double kappa = 0.0;
  UnitsConvention units;

  double v() const { return kappa * units.hbar / (a * units.mass); }
  void validate() const {
    units.validate();
    if (lambda < 1) throw std::invalid_argument("pt: lambda must be >= 1");
    if (!(a > 0.0)) throw std::invalid_argument("pt: a must be > 0");
    if (kappa < 0.0) throw std::invalid_argument("pt: kappa must be >= 0");
  }
};

// Bound modes for any integer lambda (normalization constants by explicit
// quadrature), sorted ground-state first (j = lambda down to 1); continuum
// channel closed forms for lambda in {1, 2} on k in [-k_max, k_max].
Eigenbasis pt_eigenmodes(const PTParams& params, double k_max = 16.0,
                         int k_points = 2048);

// lambda = 1 closed forms.
double pt_q11(double kappa);  // (pi kappa / 2) csch(pi kappa / 2), 1 at 0
complexd pt_p1(double k, double kappa, double a);

// Resonance estimate kappa = sqrt(lambda^2 - mu^2) for absorbing the well's
// kinetic energy in a j = lambda -> mu transition, 1 <= mu < lambda.
double pt_resonance_kappa(int lambda, int mu);

// lambda = 2 amplitudes from the ground state by overlap quadrature.
evolution::Decomposition pt_amplitudes_lambda2(double kappa,
                                               int k_points = 2048,
                                               double k_max = 16.0,
                                               Exec exec = Exec::parallel);

// Closed-form decomposition for lambda = 1 (grid-sampled pt_p1).
evolution::Decomposition pt_decomposition_lambda1(double kappa,
                                                  int k_points = 2048,
                                                  double k_max = 16.0);

struct BoundSweepPoint {
  double kappa;
  std::vector<double> bound_probabilities;  // ground first
  double continuum;                         // 1 - sum(bound)
};

// Bound-state probabilities on a kappa grid (figure data; parallel over
// kappa, bit-identical to the serial path).
std::vector<BoundSweepPoint> pt_bound_sweep(int lambda, double kappa_lo,
                                            double kappa_hi, double step,
                                            Exec exec = Exec::parallel);

}  // namespace quench::pt
