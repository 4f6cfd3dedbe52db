#pragma once

// Sequence acceleration for tails of the form  a_N = L + sum_i c_i / N^{p_i}.
// Brezinski's E-algorithm eliminates the supplied powers one at a time; the
// last entry of the final column equals the solution of the linear system
// through the trailing len(powers)+1 points, so a sequence whose tail
// contains exactly the supplied powers is resolved to rounding error.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace quench::numerics {

struct AccelerationTable {
  std::vector<double> raw_sequence;
  int order = 0;                    // number of eliminated powers
  double extrapolated = 0.0;        // top-right tableau entry
  std::vector<double> fitted_tail;  // c_i for each supplied power, in order
};

namespace detail {

template <class Real>
struct ETableau {
  std::vector<Real> limit_column;    // E_m^{(j)} after all eliminations
  std::vector<std::vector<Real>> tail_coeffs;  // per power, from final solve
};

// One elimination stage of the E-algorithm over value row E and auxiliary
// rows G[i] (the remaining tail basis functions sampled at each index).
template <class Real>
void e_stage(std::vector<Real>& E, std::vector<std::vector<Real>>& G,
             size_t stage) {
  const size_t n = E.size();
  std::vector<Real> newE(n - 1);
  std::vector<std::vector<Real>> newG(G.size());
  for (size_t i = stage + 1; i < G.size(); ++i) newG[i].resize(n - 1);
  for (size_t j = 0; j + 1 < n; ++j) {
    const Real denom = G[stage][j + 1] - G[stage][j];
    if (denom == Real(0))
      throw std::invalid_argument(
          "richardson_extrapolate: degenerate elimination (repeated powers?)");
    newE[j] = (E[j] * G[stage][j + 1] - E[j + 1] * G[stage][j]) / denom;
    for (size_t i = stage + 1; i < G.size(); ++i)
      newG[i][j] =
          (G[i][j] * G[stage][j + 1] - G[i][j + 1] * G[stage][j]) / denom;
  }
  E = std::move(newE);
  G = std::move(newG);
}

// Solve a_j = L + sum_i c_i N_j^{-p_i} on the trailing m+1 points for the
// tail coefficients (L is already known from the tableau).
template <class Real>
std::vector<Real> fit_tail(const std::vector<Real>& seq,
                           const std::vector<double>& powers, long n_start,
                           Real limit) {
  using std::abs;
  using std::pow;
  const size_t m = powers.size();
  const size_t n = seq.size();
  std::vector<std::vector<Real>> A(m, std::vector<Real>(m + 1));
  for (size_t r = 0; r < m; ++r) {
    const size_t j = n - m + r;
    const Real N = Real(double(n_start + static_cast<long>(j)));
    for (size_t c = 0; c < m; ++c)
      A[r][c] = pow(N, Real(-powers[c]));
    A[r][m] = seq[j] - limit;
  }
  // Gaussian elimination with partial pivoting.
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < m; ++r)
      if (abs(A[r][col]) > abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    if (A[col][col] == Real(0))
      throw std::invalid_argument("richardson_extrapolate: singular tail fit");
    for (size_t r = col + 1; r < m; ++r) {
      const Real f = A[r][col] / A[col][col];
      for (size_t c = col; c <= m; ++c) A[r][c] -= f * A[col][c];
    }
  }
  std::vector<Real> x(m);
  for (size_t r = m; r-- > 0;) {
    Real s = A[r][m];
    for (size_t c = r + 1; c < m; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return x;
}

}  // namespace detail

// Core routine, usable with double or a multiprecision real.  `n_start` is
// the index N of seq[0]; entries correspond to N = n_start, n_start+1, ...
template <class Real>
Real richardson_limit(const std::vector<Real>& seq,
                      const std::vector<double>& powers, long n_start = 1) {
  using std::pow;
  if (powers.empty())
    throw std::invalid_argument("richardson_extrapolate: no powers supplied");
  if (seq.size() < powers.size() + 1)
    throw std::invalid_argument(
        "richardson_extrapolate: need length(seq) > length(powers)");
  for (size_t i = 0; i < powers.size(); ++i)
    for (size_t j = i + 1; j < powers.size(); ++j)
      if (powers[i] == powers[j])
        throw std::invalid_argument("richardson_extrapolate: repeated powers");

  std::vector<Real> E = seq;
  std::vector<std::vector<Real>> G(powers.size(),
                                   std::vector<Real>(seq.size()));
  for (size_t i = 0; i < powers.size(); ++i)
    for (size_t j = 0; j < seq.size(); ++j)
      G[i][j] = pow(Real(double(n_start + static_cast<long>(j))),
                    Real(-powers[i]));
  for (size_t stage = 0; stage < powers.size(); ++stage)
    detail::e_stage(E, G, stage);
  return E.back();
}

inline AccelerationTable richardson_extrapolate(
    const std::vector<double>& seq, const std::vector<double>& powers,
    long n_start = 1) {
  for (double v : seq)
    if (!std::isfinite(v))
      throw std::invalid_argument("richardson_extrapolate: non-finite entry");
  AccelerationTable table;
  table.raw_sequence = seq;
  table.order = static_cast<int>(powers.size());
  table.extrapolated = richardson_limit<double>(seq, powers, n_start);
  table.fitted_tail =
      detail::fit_tail<double>(seq, powers, n_start, table.extrapolated);
  return table;
}

}  // namespace quench::numerics
