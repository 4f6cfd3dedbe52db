#pragma once

// Second-order Strang split-step propagator for
//   i hbar dPsi/dt = -hbar^2/(2m) Psi'' + V(x - v t) Psi
// on a uniform periodic grid (spectral kinetic step).  Used as the
// grid-method oracle against the spectral decomposition.
//
// Step from t to t+dt: half potential kick, full kinetic step, half kick,
// with the potential sampled at its displaced position at the step midpoint.
// Stability heuristic: dt * max|V| / hbar << 1 and the grid Nyquist momentum
// well above the state's momentum content; dt = 1e-3 covers every run here.

#include <functional>
#include <vector>

#include "quench/parallel.hpp"
#include "quench/types.hpp"
#include "quench/units.hpp"

namespace quench::evolution {

struct SplitStepOptions {
  double dt = 1e-3;
  double boundary_tol = 1e-8;     // max |Psi| allowed at the grid edges
  int boundary_check_stride = 250;  // steps between edge checks
  UnitsConvention units;
  Exec exec = Exec::parallel;
};

// Propagate to t_final; throws DomainTooSmallError on boundary leakage.
WavefunctionFrame split_step_propagate(
    const WavefunctionFrame& initial,
    const std::function<double(double)>& potential,  // V(xi), xi = x - v t
    double v, double t_final, const SplitStepOptions& opt = {});

// Same walk, returning frames at each requested time (ascending).
std::vector<WavefunctionFrame> split_step_frames(
    const WavefunctionFrame& initial,
    const std::function<double(double)>& potential, double v,
    const std::vector<double>& times, const SplitStepOptions& opt = {});

}  // namespace quench::evolution
