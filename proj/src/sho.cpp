#include "quench/sho.hpp"

#include <cmath>

#include "quench/errors.hpp"
#include "quench/special_functions.hpp"

namespace quench::sho {

complexd sho_amplitude(int n, double kappa) {
  if (n < 0) throw std::invalid_argument("sho_amplitude: n < 0");
  if (kappa < 0.0) throw std::invalid_argument("sho_amplitude: kappa < 0");
  complexd q(std::exp(-0.5 * kappa), 0.0);
  for (int j = 1; j <= n; ++j)
    q *= complexd(0.0, -1.0) * std::sqrt(kappa / j);
  return q;
}

int required_n_max(double kappa, double tail_tol) {
  int n = std::max(1, static_cast<int>(kappa));
  double pmf = std::exp(-kappa);
  double cdf = pmf;  // terms 0..n accumulated below
  for (int j = 1; j <= n; ++j) {
    pmf *= kappa / j;
    cdf += pmf;
  }
  while (1.0 - cdf > tail_tol) {
    ++n;
    pmf *= kappa / n;
    cdf += pmf;
    if (n > 100000)
      throw std::invalid_argument("required_n_max: tail tolerance unreachable");
  }
  return n;
}

ProbabilityBudget sho_probability_spectrum(double kappa, int n_max,
                                           double tail_tol) {
  if (n_max < 1) throw std::invalid_argument("sho_probability_spectrum: n_max < 1");
  ProbabilityBudget b;
  double pmf = std::exp(-kappa);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) pmf *= kappa / n;
    b.bound.emplace_back(std::vector<int>{n}, pmf);
    sum += pmf;
  }
  const double tail = 1.0 - sum;
  if (tail > tail_tol)
    throw TruncationError(
        "sho_probability_spectrum: Poisson tail " + std::to_string(tail) +
            " above tolerance",
        required_n_max(kappa, tail_tol));
  b.continuum = 0.0;  // purely discrete spectrum
  b.total = sum;
  b.defect = std::fabs(b.total - 1.0);
  return b;
}

ResonanceCheck sho_resonance_check(int n) {
  if (n < 1) throw std::invalid_argument("sho_resonance_check: n < 1");
  // |Q_{0,n}(kappa)|^2 = e^{-kappa} kappa^n / n! is unimodal with its
  // stationary point at kappa = n; locate it by ternary search.
  auto p = [n](double kappa) {
    return std::norm(sho_amplitude(n, kappa));
  };
  double lo = std::max(0.0, n - 5.0), hi = n + 5.0;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (p(m1) < p(m2))
      lo = m1;
    else
      hi = m2;
  }
  ResonanceCheck r;
  r.argmax_kappa = 0.5 * (lo + hi);
  r.equality_defect = std::fabs(std::norm(sho_amplitude(n, double(n))) -
                                std::norm(sho_amplitude(n - 1, double(n))));
  return r;
}

Eigenbasis sho_eigenmodes(const SHOParams& params) {
  params.validate();
  const double s = std::sqrt(params.units.mass * params.omega / params.units.hbar);

  Eigenbasis basis;
  basis.units = params.units;
  // Hermite functions reach out to xi ~ sqrt(2 n + 1); overlap integrands
  // are Gaussian-damped beyond that.
  basis.overlap_half_width =
      (std::sqrt(2.0 * params.n_max + 1.0) + 12.0) / s;
  for (int n = 0; n <= params.n_max; ++n) {
    const double energy = params.units.hbar * params.omega * (n + 0.5);
    basis.bound.push_back({{n}, energy, [n, s](double x) {
                             return std::sqrt(s) *
                                    numerics::hermite_function(n, s * x);
                           }});
  }
  return basis;
}

evolution::Decomposition sho_decomposition(const SHOParams& params) {
  params.validate();
  evolution::Decomposition d;
  d.velocity = params.v();
  d.units = params.units;
  d.bound.velocity_param = params.kappa;
  for (int n = 0; n <= params.n_max; ++n)
    d.bound.entries.push_back({{n}, sho_amplitude(n, params.kappa)});
  return d;
}

}  // namespace quench::sho
