#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace quench {

using complexd = std::complex<double>;

struct SpatialGrid {
  double x0 = 0.0;
  double dx = 0.0;
  int n = 0;

  static SpatialGrid over(double lo, double hi, int n) {
    if (!(hi > lo) || n < 2)
      throw std::invalid_argument("SpatialGrid: need hi > lo and n >= 2");
    return {lo, (hi - lo) / n, n};  // half-open [lo, hi), FFT-friendly
  }
  double position(int i) const { return x0 + dx * i; }
  double upper() const { return x0 + dx * n; }
};

struct WavefunctionFrame {
  SpatialGrid grid;
  std::vector<complexd> values;
  double time = 0.0;

  double norm() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return std::sqrt(s * grid.dx);
  }
  void normalize() {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero frame");
    for (auto& v : values) v /= n;
  }
};

// L2 distance of two frames on the same grid.
double l2_distance(const WavefunctionFrame& a, const WavefunctionFrame& b);

struct BoundAmplitude {
  std::vector<int> quantum_numbers;
  complexd amplitude;
};

struct BoundAmplitudeSet {
  std::vector<BoundAmplitude> entries;
  double velocity_param = 0.0;  // the scenario's dimensionless theta or kappa

  double probability_sum() const {
    double s = 0.0;
    for (const auto& e : entries) s += std::norm(e.amplitude);
    return s;
  }
};

// Continuum amplitudes sampled on a strictly increasing momentum grid.
// Modes are normalized to <phi_k', phi_k> = 2 pi delta(k - k'); every
// probability integral therefore carries a dk/(2 pi) measure.
struct ContinuumAmplitude {
  static constexpr const char* kNormalization = "2*pi*delta(k-k')";

  std::string channel;
  std::vector<double> k_grid;
  std::vector<complexd> values;

  void validate() const;
  // trapezoid of |P(k)|^2 dk / (2 pi) over the stored grid
  double probability() const;
};

struct ProbabilityBudget {
  std::vector<std::pair<std::vector<int>, double>> bound;
  double continuum = 0.0;
  double total = 0.0;
  double defect = 0.0;

  double bound_sum() const {
    double s = 0.0;
    for (const auto& [qn, p] : bound) s += p;
    return s;
  }
};

}  // namespace quench
