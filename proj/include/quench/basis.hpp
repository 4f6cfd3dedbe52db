#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quench/types.hpp"
#include "quench/units.hpp"

namespace quench {

// One bound eigenmode of the static potential.
struct BoundMode {
  std::vector<int> quantum_numbers;
  double energy = 0.0;
  std::function<double(double)> phi;  // real-valued in all 1D scenarios here
};

// One continuum channel: a family of scattering modes phi(k, x) normalized to
// 2 pi delta(k-k') on this channel's k-range, with energy hbar^2 k^2 / 2m.
struct ContinuumChannel {
  std::string label;
  std::function<complexd(double, double)> phi;  // (k, x) -> mode value
  double k_lo = 0.0;
  double k_hi = 0.0;
  int default_points = 2048;
};

// A complete eigenbasis of a static 1D potential plus the integration hints
// the decomposition quadrature needs.
struct Eigenbasis {
  UnitsConvention units;
  std::vector<BoundMode> bound;
  std::vector<ContinuumChannel> channels;

  // Overlap integrals run over [-overlap_half_width, overlap_half_width],
  // split at `kinks` (points where modes have |.|-type derivative jumps).
  double overlap_half_width = 60.0;
  std::vector<double> kinks;
};

}  // namespace quench
