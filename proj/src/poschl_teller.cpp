#include "quench/poschl_teller.hpp"

#include <cmath>

#include "quench/quadrature.hpp"
#include "quench/special_functions.hpp"

namespace quench::pt {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

// N_j such that (N_j/sqrt(a)) P_lambda^j(tanh(x/a)) has unit L2 norm; the
// norm is a-independent in the scaled variable.
double legendre_norm_constant(int lambda, int j) {
  auto f = [lambda, j](double u) {
    const double p = numerics::assoc_legendre(lambda, j, std::tanh(u));
    return p * p;
  };
  const auto r = numerics::integrate_adaptive(
      f, numerics::HalfLine{0.0, numerics::TailDecay::exponential, 0.5},
      {1e-14, 1e-13});
  return 1.0 / std::sqrt(2.0 * r.value.real());
}

complexd pt_continuum_lambda1(double a, double k, double xi) {
  const double u = std::tanh(xi / a);
  const complexd iak(0.0, a * k);
  return (iak - u) / (1.0 + iak) *
         complexd(std::cos(k * xi), std::sin(k * xi));
}

// lambda = 2 scattering state from the Darboux chain applied to the
// lambda = 1 solution; unit incoming amplitude at x -> -inf:
//   e^{ikx} (3 tanh^2(x/a) - 3 i a k tanh(x/a) - (1 + a^2 k^2))
//     / ((1 + i a k)(2 + i a k)).
complexd pt_continuum_lambda2(double a, double k, double xi) {
  const double u = std::tanh(xi / a);
  const double ak = a * k;
  const complexd num(3.0 * u * u - (1.0 + ak * ak), -3.0 * ak * u);
  const complexd den = complexd(1.0, ak) * complexd(2.0, ak);
  return num / den * complexd(std::cos(k * xi), std::sin(k * xi));
}

}  // namespace

double pt_q11(double kappa) {
  if (kappa == 0.0) return 1.0;
  const double z = 0.5 * kPi * kappa;
  return z / std::sinh(z);
}

complexd pt_p1(double k, double kappa, double a) {
  const complexd den = std::sqrt(2.0) * complexd(a * k, 1.0);
  return kPi * std::sqrt(a) * kappa / den /
         std::cosh(0.5 * kPi * (a * k + kappa));
}

double pt_resonance_kappa(int lambda, int mu) {
  if (mu < 1 || mu >= lambda)
    throw std::invalid_argument("pt_resonance_kappa: need 1 <= mu < lambda");
  return std::sqrt(double(lambda) * lambda - double(mu) * mu);
}

Eigenbasis pt_eigenmodes(const PTParams& params, double k_max, int k_points) {
  params.validate();
  const double a = params.a;
  const double hbar = params.units.hbar;
  const double m = params.units.mass;

  Eigenbasis basis;
  basis.units = params.units;
  basis.overlap_half_width = 42.0 * a;

  // ground state first: j = lambda, lambda-1, ..., 1
  for (int j = params.lambda; j >= 1; --j) {
    const double norm_c = legendre_norm_constant(params.lambda, j);
    const double energy = -double(j) * j * hbar * hbar / (2.0 * a * a * m);
    const int lambda = params.lambda;
    basis.bound.push_back({{j},
                           energy,
                           [lambda, j, norm_c, a](double x) {
                             return norm_c / std::sqrt(a) *
                                    numerics::assoc_legendre(
                                        lambda, j, std::tanh(x / a));
                           }});
  }

  if (params.lambda > 2)
    return basis;  // bound-only basis; no closed continuum housed here

  ContinuumChannel ch;
  ch.label = "two-sided";
  ch.k_lo = -k_max / a;
  ch.k_hi = k_max / a;
  ch.default_points = k_points;
  if (params.lambda == 1)
    ch.phi = [a](double k, double xi) { return pt_continuum_lambda1(a, k, xi); };
  else
    ch.phi = [a](double k, double xi) { return pt_continuum_lambda2(a, k, xi); };
  basis.channels.push_back(std::move(ch));
  return basis;
}

evolution::Decomposition pt_decomposition_lambda1(double kappa, int k_points,
                                                  double k_max) {
  PTParams p;
  p.lambda = 1;
  p.kappa = kappa;
  evolution::Decomposition d;
  d.velocity = p.v();
  d.units = p.units;
  d.bound.velocity_param = kappa;
  d.bound.entries.push_back({{1}, complexd(pt_q11(kappa), 0.0)});

  ContinuumAmplitude amp;
  amp.channel = "two-sided";
  amp.k_grid.resize(k_points);
  amp.values.resize(k_points);
  const double dk = 2.0 * k_max / (k_points - 1);
  for (int i = 0; i < k_points; ++i) {
    const double k = -k_max + dk * i;
    amp.k_grid[i] = k;
    amp.values[i] = pt_p1(k, kappa, p.a);
  }
  d.continuum.push_back(std::move(amp));
  return d;
}

evolution::Decomposition pt_amplitudes_lambda2(double kappa, int k_points,
                                               double k_max, Exec exec) {
  PTParams p;
  p.lambda = 2;
  p.kappa = kappa;
  Eigenbasis basis = pt_eigenmodes(p, k_max, k_points);
  evolution::DecomposeOptions opt;
  opt.exec = exec;
  opt.quad = {1e-12, 1e-10};
  return evolution::decompose(basis, 0, p.v(), kappa, opt);
}

std::vector<BoundSweepPoint> pt_bound_sweep(int lambda, double kappa_lo,
                                            double kappa_hi, double step,
                                            Exec exec) {
  if (!(step > 0.0) || !(kappa_hi >= kappa_lo))
    throw std::invalid_argument("pt_bound_sweep: bad kappa range");
  PTParams ref;
  ref.lambda = lambda;
  Eigenbasis basis = pt_eigenmodes(ref, 16.0, 2);
  basis.channels.clear();  // bound amplitudes only

  const int n = static_cast<int>(std::floor((kappa_hi - kappa_lo) / step)) + 1;
  std::vector<BoundSweepPoint> out(n);
  parallel_for(n, exec, [&](int i) {
    const double kappa = kappa_lo + step * i;
    PTParams p;
    p.lambda = lambda;
    p.kappa = kappa;
    evolution::DecomposeOptions opt;
    opt.exec = Exec::serial;  // outer loop already parallel
    auto d = evolution::decompose(basis, 0, p.v(), kappa, opt);
    BoundSweepPoint pt;
    pt.kappa = kappa;
    double sum = 0.0;
    for (const auto& e : d.bound.entries) {
      pt.bound_probabilities.push_back(std::norm(e.amplitude));
      sum += pt.bound_probabilities.back();
    }
    pt.continuum = 1.0 - sum;
    out[i] = std::move(pt);
  });
  return out;
}

}  // namespace quench::pt
