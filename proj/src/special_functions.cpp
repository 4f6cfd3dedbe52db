#include "quench/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "quench/errors.hpp"

namespace quench::numerics {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

double assoc_legendre(int l, int m, double x) {
  if (l < 0) throw std::invalid_argument("assoc_legendre: l < 0");
  if (std::abs(m) > l) throw std::invalid_argument("assoc_legendre: |m| > l");
  if (!(x >= -1.0 && x <= 1.0))
    throw std::invalid_argument("assoc_legendre: x outside [-1,1]");

  if (m < 0) {
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    const int mm = -m;
    double ratio = 1.0;
    for (int k = l - mm + 1; k <= l + mm; ++k) ratio *= k;
    const double sign = (mm % 2 == 0) ? 1.0 : -1.0;
    return sign / ratio * assoc_legendre(l, mm, x);
  }

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n < 0");
  if (n == 0) return 1.0;
  double hm = 1.0, h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double hermite_function(int n, double xi) {
  if (n < 0) throw std::invalid_argument("hermite_function: n < 0");
  const double g = std::exp(-0.5 * xi * xi) / std::pow(kPi, 0.25);
  if (n == 0) return g;
  // h_{k+1} = xi sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
  double hm = g, h = std::sqrt(2.0) * xi * g;
  for (int k = 1; k < n; ++k) {
    const double hp =
        xi * std::sqrt(2.0 / (k + 1.0)) * h - std::sqrt(k / (k + 1.0)) * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double laguerre_assoc(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre_assoc: n < 0");
  if (n == 0) return 1.0;
  double lm = 1.0, l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lp =
        ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
    lm = l;
    l = lp;
  }
  return l;
}

double spherical_bessel(int l, double x) {
  if (l < 0) throw std::invalid_argument("spherical_bessel: l < 0");
  if (x < 0.0) throw std::invalid_argument("spherical_bessel: x < 0");
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (l == 0) return std::sin(x) / x;

  // Small argument: j_l(x) = x^l/(2l+1)!! * sum with term ratio
  // -x^2/(2k(2l+2k+1)); avoids the underflow-prone downward pass.
  if (x * x < 0.5 * (2.0 * l + 3.0)) {
    double lead = 1.0;
    for (int k = 1; k <= l; ++k) lead *= x / (2.0 * k + 1.0);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= -x * x / (2.0 * k * (2.0 * l + 2.0 * k + 1.0));
      sum += term;
      if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return lead * sum;
  }

  if (x > static_cast<double>(l) + 10.0) {
    // Upward recurrence is stable once x exceeds the order.
    double jm = std::sin(x) / x;
    double j = (std::sin(x) / x - std::cos(x)) / x;
    for (int k = 1; k < l; ++k) {
      const double jp = (2.0 * k + 1.0) / x * j - jm;
      jm = j;
      j = jp;
    }
    return j;
  }

  // Miller's downward recurrence normalized by j_0.
  const int lstart = l + 20 + static_cast<int>(x);
  double jpp = 0.0;    // j_{k+2}
  double jp = 1e-300;  // j_{k+1}
  double jl_unnorm = 0.0;
  for (int k = lstart; k >= 0; --k) {
    const double jk = (2.0 * k + 3.0) / x * jp - jpp;
    jpp = jp;
    jp = jk;
    if (k == l) jl_unnorm = jk;
    if (std::fabs(jk) > 1e280) {
      jpp *= 1e-280;
      jp *= 1e-280;
      jl_unnorm *= 1e-280;
    }
  }
  // jp now holds the unnormalized j_0 = sin(x)/x.
  return jl_unnorm * (std::sin(x) / x) / jp;
}

namespace {

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

std::complex<double> log_gamma_positive(std::complex<double> z) {
  // valid for Re z > 0
  std::complex<double> sum = kLanczosC[0];
  for (int i = 1; i < 15; ++i) sum += kLanczosC[i] / (z + double(i - 1));
  const std::complex<double> t = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t +
         std::log(sum);
}

bool is_nonpositive_integer(std::complex<double> z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (is_nonpositive_integer(z))
    throw std::invalid_argument("log_gamma: pole at non-positive integer");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return log_gamma_positive(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z), Im z >= 0 here.
  const std::complex<double> lg = log_gamma_positive(1.0 - z);
  std::complex<double> logsin;
  if (z.imag() > 20.0) {
    // sin(pi z) = e^{-i pi z}(e^{2 i pi z} - 1)/(2i): avoid overflow
    const std::complex<double> ipz(-kPi * z.imag(), kPi * z.real());
    logsin = -ipz - std::log(std::complex<double>(0.0, 2.0)) +
             std::log(1.0 - std::exp(2.0 * ipz));
  } else {
    logsin = std::log(std::sin(kPi * z));
  }
  return std::log(std::complex<double>(kPi)) - logsin - lg;
}

double gamma_abs_complex(std::complex<double> z) {
  if (is_nonpositive_integer(z))
    throw std::invalid_argument("gamma_abs_complex: pole at non-positive integer");
  return std::exp(log_gamma(z).real());
}

namespace {

std::complex<double> hyp1f1_series(std::complex<double> a,
                                   std::complex<double> b,
                                   std::complex<double> z) {
  std::complex<double> term = 1.0, sum = 1.0;
  for (int k = 0; k < 2000; ++k) {
    term *= (a + double(k)) / (b + double(k)) * z / (k + 1.0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > 4) return sum;
  }
  throw ConvergenceError("hyp1f1: Maclaurin series did not converge", sum,
                         std::abs(term), 2000);
}

// Large-|z| expansion
//   1F1(a;b;z) ~ Gamma(b) [ (-z)^{-a}/Gamma(b-a) S1 + e^z z^{a-b}/Gamma(a) S2 ]
//   S1 = sum_s (a)_s (a-b+1)_s / (s! (-z)^s),
//   S2 = sum_s (b-a)_s (1-a)_s / (s! z^s),
// summed to their smallest terms.
std::complex<double> asymptotic_sum(std::complex<double> p,
                                    std::complex<double> q,
                                    std::complex<double> zinv) {
  std::complex<double> term = 1.0, sum = 1.0;
  double smallest = 1.0;
  for (int s = 0; s < 200; ++s) {
    term *= (p + double(s)) * (q + double(s)) / (s + 1.0) * zinv;
    const double mag = std::abs(term);
    if (mag > smallest) break;  // asymptotic tail started growing
    smallest = mag;
    sum += term;
    if (mag <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

std::complex<double> hyp1f1_asymptotic(std::complex<double> a,
                                       std::complex<double> b,
                                       std::complex<double> z) {
  // (-z) on the sheet adjacent to the principal branch of z
  const std::complex<double> minus_z = -z;
  const std::complex<double> lg_b = log_gamma(b);
  const std::complex<double> s1 = asymptotic_sum(a, a - b + 1.0, -1.0 / z);
  const std::complex<double> s2 = asymptotic_sum(b - a, 1.0 - a, 1.0 / z);
  std::complex<double> t1(0.0, 0.0), t2(0.0, 0.0);
  if (!is_nonpositive_integer(b - a))
    t1 = std::exp(lg_b - log_gamma(b - a) - a * std::log(minus_z)) * s1;
  if (!is_nonpositive_integer(a))
    t2 = std::exp(lg_b - log_gamma(a) + z + (a - b) * std::log(z)) * s2;
  return t1 + t2;
}

}  // namespace

std::complex<double> hyp1f1_complex(std::complex<double> a,
                                    std::complex<double> b,
                                    std::complex<double> z) {
  if (is_nonpositive_integer(b))
    throw std::invalid_argument("hyp1f1: b is a non-positive integer");
  if (z == std::complex<double>(0.0, 0.0)) return 1.0;
  if (a == b) return std::exp(z);
  if (std::abs(z) <= kHyp1f1SeriesRadius) {
    // Kummer's transformation keeps the series terms from oscillating in
    // sign when Re z is very negative.
    if (z.real() < -0.5 * kHyp1f1SeriesRadius)
      return std::exp(z) * hyp1f1_series(b - a, b, -z);
    return hyp1f1_series(a, b, z);
  }
  return hyp1f1_asymptotic(a, b, z);
}

}  // namespace quench::numerics
