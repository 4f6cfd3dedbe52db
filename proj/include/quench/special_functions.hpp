#pragma once

#include <complex>

namespace quench::numerics {

// Associated Legendre P_l^m(x), Condon-Shortley phase:
// P_1^1(x) = -sqrt(1-x^2).  Requires l >= 0, |m| <= l, x in [-1,1].
double assoc_legendre(int l, int m, double x);

// Physicists' Hermite polynomial H_n(x), three-term recurrence.
double hermite(int n, double x);

// Normalized harmonic-oscillator eigenfunction in the scaled coordinate,
// h_n(xi) = H_n(xi) e^{-xi^2/2} / sqrt(2^n n! sqrt(pi)); stable for large n.
double hermite_function(int n, double xi);

// Generalized Laguerre L_n^alpha(x) by upward recurrence.
double laguerre_assoc(int n, double alpha, double x);

// Spherical Bessel j_l(x), x >= 0; series near zero, Miller's downward
// recurrence otherwise.  j_l(0) = delta_{l0}.
double spherical_bessel(int l, double x);

// log Gamma(z) on the principal branch (Lanczos, reflection for Re z < 0.5).
std::complex<double> log_gamma(std::complex<double> z);

// |Gamma(z)|; throws std::invalid_argument at the poles.
double gamma_abs_complex(std::complex<double> z);

// Confluent hypergeometric 1F1(a;b;z).  Maclaurin series for |z| below the
// branch threshold, large-|z| asymptotic expansion above it.
std::complex<double> hyp1f1_complex(std::complex<double> a,
                                    std::complex<double> b,
                                    std::complex<double> z);

// Series/asymptotic switchover radius used by hyp1f1_complex.
inline constexpr double kHyp1f1SeriesRadius = 30.0;

}  // namespace quench::numerics
