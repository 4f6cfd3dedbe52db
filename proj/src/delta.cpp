#include "quench/delta.hpp"

#include <cmath>

#include "quench/quadrature.hpp"

namespace quench::delta_well {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double denom(double k, double theta, double beta) {
  const double b2 = beta * beta;
  const double k2 = k * k;
  const double tp = theta * theta + 1.0;
  return b2 * b2 * tp * tp + k2 * k2 - 2.0 * b2 * (theta * theta - 1.0) * k2;
}
}  // namespace

double q11(double theta) { return 4.0 / (theta * theta + 4.0); }

double p1_even(double k, double theta, double beta) {
  return 4.0 * std::sqrt(2.0) * std::pow(beta, 3.5) * theta * theta * k /
         (std::sqrt(beta * beta + k * k) * denom(k, theta, beta));
}

complexd p1_odd(double k, double theta, double beta) {
  return complexd(0.0, -4.0 * std::sqrt(2.0) * std::pow(beta, 2.5) * theta * k /
                           denom(k, theta, beta));
}

double continuum_closed(double theta) {
  const double q = q11(theta);
  return 1.0 - q * q;
}

double continuum_numeric(double theta, numerics::QuadratureOptions opt) {
  // |P|^2 depends on k/beta only; integrate at beta = 1.
  auto f = [theta](double k) {
    return std::norm(p1_even(k, theta, 1.0)) + std::norm(p1_odd(k, theta, 1.0));
  };
  // |P^(o)|^2 ~ k^-6: algebraic transform; scale near the resonance radius.
  const double scale = std::max(1.0, theta);
  const auto r = numerics::integrate_adaptive(
      f, numerics::HalfLine{0.0, numerics::TailDecay::algebraic, scale}, opt);
  return r.value.real() / kTwoPi;
}

ProbabilityBudget delta_probabilities(double theta) {
  ProbabilityBudget b;
  const double q = q11(theta);
  b.bound.emplace_back(std::vector<int>{0}, q * q);
  b.continuum = continuum_numeric(theta);
  b.total = b.bound_sum() + b.continuum;
  b.defect = std::fabs(b.total - 1.0);
  return b;
}

double default_k_max(double theta, double beta) {
  // Tail of int |P|^2 dk/(2 pi) beyond K is ~ 16 beta^5 theta^2 / (5 pi K^5);
  // keep it below 1e-12 so the round-trip L2 defect stays under 1e-6.
  const double t2 = std::max(theta * theta, 1e-4);
  const double k5 = 16.0 * t2 * 1e12 / (5.0 * 3.141592653589793);
  return beta * std::max(40.0, std::pow(k5, 0.2));
}

Eigenbasis delta_eigenmodes(const DeltaParams& params, double k_max,
                            int k_points) {
  params.validate();
  const double beta = params.beta();
  if (k_max <= 0.0) k_max = default_k_max(params.theta(), beta);

  Eigenbasis basis;
  basis.units = params.units;
  basis.overlap_half_width = 40.0 / beta;
  basis.kinks = {0.0};

  basis.bound.push_back(
      {{0},
       params.bound_energy(),
       [beta](double x) { return std::sqrt(beta) * std::exp(-beta * std::fabs(x)); }});

  ContinuumChannel even;
  even.label = "even";
  even.k_lo = 0.0;
  even.k_hi = k_max;
  even.default_points = k_points;
  even.phi = [beta](double k, double x) {
    if (k == 0.0) return complexd(0.0, 0.0);
    const double num =
        k * std::cos(k * x) - beta * std::sin(k * std::fabs(x));
    return complexd(std::sqrt(2.0) * num / std::sqrt(beta * beta + k * k), 0.0);
  };
  basis.channels.push_back(std::move(even));

  ContinuumChannel odd;
  odd.label = "odd";
  odd.k_lo = 0.0;
  odd.k_hi = k_max;
  odd.default_points = k_points;
  odd.phi = [](double k, double x) {
    return complexd(std::sqrt(2.0) * std::sin(k * x), 0.0);
  };
  basis.channels.push_back(std::move(odd));
  return basis;
}

evolution::Decomposition delta_decomposition(const DeltaParams& params,
                                             double k_max, int k_points) {
  params.validate();
  const double beta = params.beta();
  const double theta = params.theta();
  if (k_max <= 0.0) k_max = default_k_max(theta, beta);

  evolution::Decomposition d;
  d.velocity = params.v;
  d.units = params.units;
  d.bound.velocity_param = theta;
  d.bound.entries.push_back({{0}, complexd(q11(theta), 0.0)});

  const double dk = k_max / (k_points - 1);
  ContinuumAmplitude even, odd;
  even.channel = "even";
  odd.channel = "odd";
  even.k_grid.resize(k_points);
  odd.k_grid.resize(k_points);
  even.values.resize(k_points);
  odd.values.resize(k_points);
  for (int i = 0; i < k_points; ++i) {
    const double k = dk * i;
    even.k_grid[i] = k;
    odd.k_grid[i] = k;
    even.values[i] = complexd(p1_even(k, theta, beta), 0.0);
    odd.values[i] = p1_odd(k, theta, beta);
  }
  d.continuum.push_back(std::move(even));
  d.continuum.push_back(std::move(odd));
  return d;
}

}  // namespace quench::delta_well
