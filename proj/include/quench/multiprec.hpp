#pragma once

// Extended-precision scalar used inside the hydrogen coefficient paths and
// the test oracles.  50 significant digits; header-only.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace quench::mp {

using real50 = boost::multiprecision::cpp_bin_float_50;

// Minimal complex-over-Real; std::complex is only specified for the builtin
// floating types.  Just the operations the series oracles need.
template <class Real>
struct cplx {
  Real re{}, im{};

  cplx() = default;
  cplx(Real r) : re(std::move(r)) {}
  cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend cplx operator+(const cplx& a, const cplx& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend cplx operator-(const cplx& a, const cplx& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend cplx operator*(const cplx& a, const cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend cplx operator/(const cplx& a, const cplx& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  cplx& operator+=(const cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Real abs(const cplx& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
  }
  friend cplx conj(const cplx& a) { return {a.re, -a.im}; }
};

using cplx50 = cplx<real50>;

}  // namespace quench::mp
