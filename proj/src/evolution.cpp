#include "quench/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "quench/errors.hpp"

namespace quench {

double l2_distance(const WavefunctionFrame& a, const WavefunctionFrame& b) {
  if (a.grid.n != b.grid.n || a.grid.dx != b.grid.dx || a.grid.x0 != b.grid.x0)
    throw std::invalid_argument("l2_distance: frames on different grids");
  double s = 0.0;
  for (int i = 0; i < a.grid.n; ++i) s += std::norm(a.values[i] - b.values[i]);
  return std::sqrt(s * a.grid.dx);
}

void ContinuumAmplitude::validate() const {
  if (k_grid.size() != values.size())
    throw std::invalid_argument("ContinuumAmplitude: grid/value size mismatch");
  for (size_t i = 0; i + 1 < k_grid.size(); ++i)
    if (!(k_grid[i] < k_grid[i + 1]))
      throw std::invalid_argument("ContinuumAmplitude: k_grid not increasing");
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("ContinuumAmplitude: non-finite value");
}

double ContinuumAmplitude::probability() const {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double s = 0.0;
  for (size_t i = 0; i + 1 < k_grid.size(); ++i) {
    const double dk = k_grid[i + 1] - k_grid[i];
    s += 0.5 * dk * (std::norm(values[i]) + std::norm(values[i + 1]));
  }
  return s / kTwoPi;
}

}  // namespace quench

namespace quench::evolution {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

complexd boost_phase(double x, double t, double v, double energy,
                     const UnitsConvention& units) {
  const double arg =
      (units.mass * v * x - 0.5 * units.mass * v * v * t - energy * t) /
      units.hbar;
  return complexd(std::cos(arg), std::sin(arg));
}

std::function<complexd(double, double)> boost_mode(
    std::function<complexd(double)> phi, double energy, double v,
    UnitsConvention units) {
  units.validate();
  return [phi = std::move(phi), energy, v, units](double x, double t) {
    return boost_phase(x, t, v, energy, units) * phi(x - v * t);
  };
}

namespace {

// Overlap <e^{-i q x} f(x), breakpoints at basis kinks>, q = m v / hbar.
complexd overlap_integral(const Eigenbasis& basis,
                          const std::function<complexd(double)>& integrand,
                          const numerics::QuadratureOptions& quad) {
  const double X = basis.overlap_half_width;
  std::vector<double> pts{-X};
  for (double k : basis.kinks)
    if (k > -X && k < X) pts.push_back(k);
  pts.push_back(X);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return numerics::integrate_adaptive(integrand, pts, quad).value;
}

}  // namespace

Decomposition decompose_general(const std::function<complexd(double)>& initial,
                                const Eigenbasis& basis, double v,
                                double velocity_param, DecomposeOptions opt) {
  basis.units.validate();
  const double q = basis.units.mass * v / basis.units.hbar;

  Decomposition out;
  out.velocity = v;
  out.units = basis.units;
  out.bound.velocity_param = velocity_param;

  for (const auto& mode : basis.bound) {
    auto f = [&](double x) {
      const complexd phase(std::cos(q * x), -std::sin(q * x));
      return phase * mode.phi(x) * initial(x);
    };
    out.bound.entries.push_back(
        {mode.quantum_numbers, overlap_integral(basis, f, opt.quad)});
  }

  for (const auto& ch : basis.channels) {
    ContinuumAmplitude amp;
    amp.channel = ch.label;
    const int n = opt.k_points_override > 0 ? opt.k_points_override
                                            : ch.default_points;
    if (n < 2 || !(ch.k_hi > ch.k_lo))
      throw std::invalid_argument("decompose: bad channel k-grid");
    amp.k_grid.resize(n);
    amp.values.resize(n);
    const double dk = (ch.k_hi - ch.k_lo) / (n - 1);
    for (int i = 0; i < n; ++i) amp.k_grid[i] = ch.k_lo + dk * i;

    std::exception_ptr failure;
    parallel_for(n, opt.exec, [&](int i) {
      if (failure) return;
      try {
        const double k = amp.k_grid[i];
        auto f = [&](double x) {
          const complexd phase(std::cos(q * x), -std::sin(q * x));
          return phase * std::conj(ch.phi(k, x)) * initial(x);
        };
        amp.values[i] = overlap_integral(basis, f, opt.quad);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    });
    if (failure) std::rethrow_exception(failure);
    out.continuum.push_back(std::move(amp));
  }
  return out;
}

Decomposition decompose(const Eigenbasis& basis, int initial_index, double v,
                        double velocity_param, DecomposeOptions opt) {
  if (initial_index < 0 ||
      initial_index >= static_cast<int>(basis.bound.size()))
    throw std::invalid_argument("decompose: initial_index out of range");
  const auto& phi = basis.bound[initial_index].phi;
  return decompose_general([&phi](double x) { return complexd(phi(x), 0.0); },
                           basis, v, velocity_param, opt);
}

Decomposition decompose_frame(const WavefunctionFrame& initial,
                              const Eigenbasis& basis, double v,
                              double velocity_param, DecomposeOptions opt) {
  basis.units.validate();
  const double q = basis.units.mass * v / basis.units.hbar;
  const auto& g = initial.grid;

  auto trapezoid_overlap = [&](auto&& mode_at) {
    complexd s(0.0, 0.0);
    for (int i = 0; i < g.n; ++i) {
      const double x = g.position(i);
      const complexd phase(std::cos(q * x), -std::sin(q * x));
      const double w = (i == 0 || i == g.n - 1) ? 0.5 : 1.0;
      s += w * phase * std::conj(mode_at(x)) * initial.values[i];
    }
    return s * g.dx;
  };

  Decomposition out;
  out.velocity = v;
  out.units = basis.units;
  out.bound.velocity_param = velocity_param;
  for (const auto& mode : basis.bound)
    out.bound.entries.push_back(
        {mode.quantum_numbers, trapezoid_overlap([&](double x) {
           return complexd(mode.phi(x), 0.0);
         })});
  for (const auto& ch : basis.channels) {
    ContinuumAmplitude amp;
    amp.channel = ch.label;
    const int n = opt.k_points_override > 0 ? opt.k_points_override
                                            : ch.default_points;
    amp.k_grid.resize(n);
    amp.values.resize(n);
    const double dk = (ch.k_hi - ch.k_lo) / (n - 1);
    for (int i = 0; i < n; ++i) amp.k_grid[i] = ch.k_lo + dk * i;
    parallel_for(n, opt.exec, [&](int i) {
      amp.values[i] = trapezoid_overlap(
          [&](double x) { return ch.phi(amp.k_grid[i], x); });
    });
    out.continuum.push_back(std::move(amp));
  }
  return out;
}

ProbabilityBudget probability_budget(
    const BoundAmplitudeSet& amps, const std::vector<ContinuumAmplitude>& cont) {
  ProbabilityBudget b;
  for (const auto& e : amps.entries)
    b.bound.emplace_back(e.quantum_numbers, std::norm(e.amplitude));
  b.continuum = 0.0;
  for (const auto& c : cont) {
    c.validate();
    b.continuum += c.probability();
  }
  b.total = b.bound_sum() + b.continuum;
  b.defect = std::fabs(b.total - 1.0);
  return b;
}

WavefunctionFrame reconstruct(const Eigenbasis& basis, const Decomposition& d,
                              double t, const SpatialGrid& grid, Exec exec) {
  if (d.bound.entries.size() != basis.bound.size())
    throw std::invalid_argument("reconstruct: amplitude/basis mismatch");
  if (d.continuum.size() != basis.channels.size())
    throw std::invalid_argument("reconstruct: channel count mismatch");
  for (const auto& c : d.continuum) c.validate();

  const double hbar = d.units.hbar;
  const double m = d.units.mass;
  const double v = d.velocity;

  WavefunctionFrame frame;
  frame.grid = grid;
  frame.time = t;
  frame.values.assign(grid.n, complexd(0.0, 0.0));

  // Time phases are x-independent: precompute per bound mode and per k.
  std::vector<complexd> bound_tphase(basis.bound.size());
  for (size_t j = 0; j < basis.bound.size(); ++j) {
    const double arg = -basis.bound[j].energy * t / hbar;
    bound_tphase[j] = complexd(std::cos(arg), std::sin(arg));
  }
  std::vector<std::vector<complexd>> cont_weight(d.continuum.size());
  for (size_t c = 0; c < d.continuum.size(); ++c) {
    const auto& amp = d.continuum[c];
    const size_t nk = amp.k_grid.size();
    cont_weight[c].resize(nk);
    for (size_t i = 0; i < nk; ++i) {
      const double k = amp.k_grid[i];
      const double arg = -hbar * k * k * t / (2.0 * m);
      // trapezoid weight dk/(2 pi), halved at the ends
      double w = 0.0;
      if (i > 0) w += 0.5 * (amp.k_grid[i] - amp.k_grid[i - 1]);
      if (i + 1 < nk) w += 0.5 * (amp.k_grid[i + 1] - amp.k_grid[i]);
      cont_weight[c][i] = amp.values[i] * (w / kTwoPi) *
                          complexd(std::cos(arg), std::sin(arg));
    }
  }

  parallel_for(grid.n, exec, [&](int ix) {
    const double x = grid.position(ix);
    const double xi = x - v * t;
    complexd acc(0.0, 0.0);
    for (size_t j = 0; j < basis.bound.size(); ++j)
      acc += d.bound.entries[j].amplitude * basis.bound[j].phi(xi) *
             bound_tphase[j];
    for (size_t c = 0; c < d.continuum.size(); ++c) {
      const auto& amp = d.continuum[c];
      const auto& mode = basis.channels[c].phi;
      complexd cacc(0.0, 0.0);
      for (size_t i = 0; i < amp.k_grid.size(); ++i)
        cacc += cont_weight[c][i] * mode(amp.k_grid[i], xi);
      acc += cacc;
    }
    const double arg = (m * v * x - 0.5 * m * v * v * t) / hbar;
    frame.values[ix] = complexd(std::cos(arg), std::sin(arg)) * acc;
  });
  return frame;
}

double check_round_trip(const Eigenbasis& basis, const Decomposition& d,
                        const std::function<complexd(double)>& initial,
                        const SpatialGrid& grid, double tol, Exec exec) {
  const WavefunctionFrame back = reconstruct(basis, d, 0.0, grid, exec);
  double s = 0.0;
  for (int i = 0; i < grid.n; ++i)
    s += std::norm(back.values[i] - initial(grid.position(i)));
  const double defect = std::sqrt(s * grid.dx);
  if (defect > tol)
    throw ResolutionError(
        "t=0 round trip defect " + std::to_string(defect) +
        " exceeds tolerance; k-grid too short or too coarse");
  return defect;
}

}  // namespace quench::evolution
