#include "quench/split_step.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "quench/errors.hpp"

namespace quench::evolution {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::mutex& fftw_planner_mutex() {
  static std::mutex m;  // FFTW plan creation is not thread-safe
  return m;
}

class Fft1d {
 public:
  explicit Fft1d(int n) : n_(n) {
    buf_ = fftw_alloc_complex(n);
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Fft1d() {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(buf_);
  }
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  complexd* data() { return reinterpret_cast<complexd*>(buf_); }
  void forward() { fftw_execute(fwd_); }
  void backward() { fftw_execute(bwd_); }  // unnormalized

 private:
  int n_;
  fftw_complex* buf_;
  fftw_plan fwd_, bwd_;
};

void check_edges(const complexd* psi, int n, double t, double tol) {
  const double edge = std::max(std::max(std::abs(psi[0]), std::abs(psi[1])),
                               std::max(std::abs(psi[n - 1]), std::abs(psi[n - 2])));
  if (edge > tol)
    throw DomainTooSmallError("split-step: |Psi| = " + std::to_string(edge) +
                              " at the grid edge at t = " + std::to_string(t) +
                              "; widen the spatial grid");
}

}  // namespace

std::vector<WavefunctionFrame> split_step_frames(
    const WavefunctionFrame& initial,
    const std::function<double(double)>& potential, double v,
    const std::vector<double>& times, const SplitStepOptions& opt) {
  opt.units.validate();
  if (!(opt.dt > 0.0)) throw std::invalid_argument("split-step: dt must be > 0");
  for (size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1]))
      throw std::invalid_argument("split-step: times must be ascending");
  if (!times.empty() && times.front() < initial.time)
    throw std::invalid_argument("split-step: cannot propagate backwards");

  const auto& g = initial.grid;
  const int n = g.n;
  const double hbar = opt.units.hbar;
  const double m = opt.units.mass;

  Fft1d fft(n);
  complexd* psi = fft.data();
  for (int i = 0; i < n; ++i) psi[i] = initial.values[i];
  check_edges(psi, n, initial.time, opt.boundary_tol);

  // kinetic phases exp(-i hbar k^2 dt / 2m) on the FFT frequency layout,
  // folded with the 1/n backward-transform normalization
  std::vector<complexd> kin(n);
  const double dk = kTwoPi / (g.dx * n);
  for (int i = 0; i < n; ++i) {
    const double k = (i <= n / 2 ? i : i - n) * dk;
    const double arg = -hbar * k * k * opt.dt / (2.0 * m);
    kin[i] = complexd(std::cos(arg), std::sin(arg)) / double(n);
  }

  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = g.position(i);
  std::vector<complexd> halfkick(n);

  std::vector<WavefunctionFrame> out;
  double t = initial.time;
  long steps_done = 0;

  auto emit = [&](double at) {
    WavefunctionFrame f;
    f.grid = g;
    f.time = at;
    f.values.assign(psi, psi + n);
    out.push_back(std::move(f));
  };

  for (double target : times) {
    const long nsteps = std::lround((target - t) / opt.dt);
    for (long s = 0; s < nsteps; ++s) {
      const double tmid = t + 0.5 * opt.dt;
      parallel_for(n, opt.exec, [&](int i) {
        const double arg =
            -potential(xs[i] - v * tmid) * opt.dt / (2.0 * hbar);
        halfkick[i] = complexd(std::cos(arg), std::sin(arg));
        psi[i] *= halfkick[i];
      });
      fft.forward();
      parallel_for(n, opt.exec, [&](int i) { psi[i] *= kin[i]; });
      fft.backward();
      parallel_for(n, opt.exec, [&](int i) { psi[i] *= halfkick[i]; });
      t += opt.dt;
      if (++steps_done % opt.boundary_check_stride == 0)
        check_edges(psi, n, t, opt.boundary_tol);
    }
    check_edges(psi, n, t, opt.boundary_tol);
    emit(target);
  }
  return out;
}

WavefunctionFrame split_step_propagate(
    const WavefunctionFrame& initial,
    const std::function<double(double)>& potential, double v, double t_final,
    const SplitStepOptions& opt) {
  auto frames = split_step_frames(initial, potential, v, {t_final}, opt);
  return std::move(frames.back());
}

}  // namespace quench::evolution
