#pragma once

// Scenario-independent machinery: Galilean boost of static eigenmodes,
// spectral decomposition of an initial state in the moving basis, frame
// reconstruction, and probability accounting.
//
// A static eigenmode phi(xi) with energy E maps to the moving-well solution
//   psi(x,t) = exp(i m v x/hbar - i m v^2 t/(2 hbar) - i E t/hbar) phi(x-vt).

#include <functional>

#include "quench/basis.hpp"
#include "quench/parallel.hpp"
#include "quench/quadrature.hpp"
#include "quench/types.hpp"

namespace quench::evolution {

// Phase factor of the boost at (x, t): exp(i(mvx - m v^2 t/2 - E t)/hbar).
complexd boost_phase(double x, double t, double v, double energy,
                     const UnitsConvention& units);

// Boosted mode as a callable psi(x, t).
std::function<complexd(double, double)> boost_mode(
    std::function<complexd(double)> phi, double energy, double v,
    UnitsConvention units);

struct Decomposition {
  BoundAmplitudeSet bound;
  std::vector<ContinuumAmplitude> continuum;
  double velocity = 0.0;
  UnitsConvention units;
};

struct DecomposeOptions {
  numerics::QuadratureOptions quad;
  int k_points_override = 0;  // 0: use each channel's default
  Exec exec = Exec::parallel;
};

// Overlaps a_j = <psi_j(.,0), Phi> = int e^{-i m v x/hbar} phi_j^*(x) Phi(x) dx
// and P(k) likewise per continuum channel, sampled on a uniform k-grid.
// This is the general-initial-state path; an eigenmode initial state is the
// special case that reduces to Kronecker/delta selection at v = 0.
Decomposition decompose_general(const std::function<complexd(double)>& initial,
                                const Eigenbasis& basis, double v,
                                double velocity_param,
                                DecomposeOptions opt = {});

// Stationary-initial-state entry point: the initial state is the
// `initial_index`-th bound mode of the static potential.
Decomposition decompose(const Eigenbasis& basis, int initial_index, double v,
                        double velocity_param, DecomposeOptions opt = {});

// Frame-sampled initial state (trapezoid overlaps on the frame's grid).
Decomposition decompose_frame(const WavefunctionFrame& initial,
                              const Eigenbasis& basis, double v,
                              double velocity_param, DecomposeOptions opt = {});

// |Q|^2 per bound state plus trapezoid continuum integrals; the defect is
// reported, never thrown.
ProbabilityBudget probability_budget(const BoundAmplitudeSet& amps,
                                     const std::vector<ContinuumAmplitude>& cont);

// Psi(x,t) as bound sum plus dk/(2 pi) trapezoid over each stored channel
// grid.  Serial and parallel paths are bit-identical.
WavefunctionFrame reconstruct(const Eigenbasis& basis, const Decomposition& d,
                              double t, const SpatialGrid& grid,
                              Exec exec = Exec::parallel);

// Round-trip guard: reconstruct at t=0 and compare against the initial state.
// Returns the L2 defect; throws ResolutionError above `tol`.
double check_round_trip(const Eigenbasis& basis, const Decomposition& d,
                        const std::function<complexd(double)>& initial,
                        const SpatialGrid& grid, double tol = 1e-6,
                        Exec exec = Exec::parallel);

inline constexpr double kReconstructionTol = 1e-6;

}  // namespace quench::evolution
