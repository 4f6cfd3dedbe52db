#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature on finite intervals and
// half-lines.  Half-lines are compactified onto t in [0,1):
//   exponential decay:  x = a - s*log(1-t),  dx = s/(1-t) dt
//   algebraic decay:    x = a + s*t/(1-t),   dx = s/(1-t)^2 dt
// The caller asserts the decay class; `scale` should be of the order of the
// integrand's decay length (exponential) or its characteristic width
// (algebraic, order >= 2).  All Kronrod nodes are interior, so the t=1
// endpoint is never evaluated.

#include <cmath>
#include <complex>
#include <queue>
#include <type_traits>
#include <vector>

#include "quench/errors.hpp"

namespace quench::numerics {

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  long evaluations = 0;

  double real() const { return value.real(); }
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  long max_evaluations = 4000000;
};

enum class TailDecay { exponential, algebraic };

struct HalfLine {
  double start = 0.0;
  TailDecay decay = TailDecay::exponential;
  double scale = 1.0;
};

namespace detail {

// Kronrod-15 abscissae on [0,1] side (symmetric), with embedded Gauss-7.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double abs_of(const T& v) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    return std::abs(v);
  } else {
    return std::fabs(v);
  }
}

template <class F>
using value_t = std::decay_t<decltype(std::declval<F&>()(0.0))>;

template <class F, class T = value_t<F>>
void gauss_kronrod_15(F& f, double a, double b, T& k15, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  T fc = f(c);
  T kres = kWgk[7] * fc;
  T gres = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    T fsum = f(c - dx) + f(c + dx);
    kres += kWgk[i] * fsum;
    if (i % 2 == 1) gres += kWg[i / 2] * fsum;
  }
  k15 = kres * h;
  err = abs_of<T>((kres - gres) * h);
}

template <class F, class T = value_t<F>>
QuadratureResult adapt(F f, std::vector<double> breakpoints,
                       const QuadratureOptions& opt) {
  T total{};
  double total_err = 0.0;
  long evals = 0;

  struct Piece {
    double a, b, err;
    T val;
  };
  auto cmp = [](const Piece& x, const Piece& y) { return x.err < y.err; };
  std::priority_queue<Piece, std::vector<Piece>, decltype(cmp)> q(cmp);

  auto push = [&](double a, double b) {
    Piece p;
    p.a = a;
    p.b = b;
    gauss_kronrod_15(f, a, b, p.val, p.err);
    evals += 15;
    if (!std::isfinite(p.err) || !std::isfinite(abs_of<T>(p.val)))
      throw ConvergenceError("integrand returned a non-finite value",
                             std::complex<double>(0, 0), p.err, evals);
    total += p.val;
    total_err += p.err;
    q.push(p);
  };

  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    push(breakpoints[i], breakpoints[i + 1]);

  auto tolerance = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * abs_of<T>(total));
  };

  while (total_err > tolerance()) {
    if (evals + 30 > opt.max_evaluations || q.empty())
      throw ConvergenceError(
          "quadrature did not reach the requested tolerance",
          std::complex<double>(total), total_err, evals);
    Piece worst = q.top();
    q.pop();
    total -= worst.val;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw ConvergenceError("interval underflow before tolerance was met",
                             std::complex<double>(total + worst.val),
                             total_err + worst.err, evals);
    push(worst.a, mid);
    push(mid, worst.b);
  }

  QuadratureResult r;
  r.value = std::complex<double>(total);
  r.error_estimate = total_err;
  r.evaluations = evals;
  return r;
}

}  // namespace detail

template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    QuadratureOptions opt = {}) {
  if (!(a < b)) throw std::invalid_argument("integrate_adaptive: need a < b");
  return detail::adapt(std::forward<F>(f), {a, b}, opt);
}

// Finite interval with interior breakpoints (kinks the integrand is known to
// have, e.g. |x| at x=0); adaptive refinement never straddles them.
template <class F>
QuadratureResult integrate_adaptive(F&& f, std::vector<double> breakpoints,
                                    QuadratureOptions opt = {}) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate_adaptive: need >= 2 breakpoints");
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw std::invalid_argument(
          "integrate_adaptive: breakpoints must be strictly increasing");
  return detail::adapt(std::forward<F>(f), std::move(breakpoints), opt);
}

template <class F>
QuadratureResult integrate_adaptive(F&& f, HalfLine dom,
                                    QuadratureOptions opt = {}) {
  if (!(dom.scale > 0.0))
    throw std::invalid_argument("integrate_adaptive: scale must be positive");
  const double a = dom.start;
  const double s = dom.scale;
  if (dom.decay == TailDecay::exponential) {
    auto g = [f = std::forward<F>(f), a, s](double t) {
      const double x = a - s * std::log1p(-t);
      return f(x) * (s / (1.0 - t));
    };
    return detail::adapt(std::move(g), {0.0, 0.5, 1.0}, opt);
  }
  auto g = [f = std::forward<F>(f), a, s](double t) {
    const double u = 1.0 - t;
    const double x = a + s * t / u;
    return f(x) * (s / (u * u));
  };
  return detail::adapt(std::move(g), {0.0, 0.5, 1.0}, opt);
}

// Whole real line, split at `center`, same decay class on both tails.
template <class F>
QuadratureResult integrate_real_line(F&& f, double center, TailDecay decay,
                                     double scale, QuadratureOptions opt = {}) {
  auto right = integrate_adaptive(f, HalfLine{center, decay, scale}, opt);
  auto mirrored = [f = std::forward<F>(f), center](double x) {
    return f(2.0 * center - x);
  };
  auto left = integrate_adaptive(std::move(mirrored),
                                 HalfLine{center, decay, scale}, opt);
  QuadratureResult r;
  r.value = right.value + left.value;
  r.error_estimate = right.error_estimate + left.error_estimate;
  r.evaluations = right.evaluations + left.evaluations;
  return r;
}

}  // namespace quench::numerics
