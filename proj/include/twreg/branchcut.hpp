#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "twreg/errors.hpp"

namespace twreg {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// Imaginary parts at or below this magnitude count as exactly zero.
inline constexpr double real_axis_threshold = 1e-300;

/// Principal argument in (-pi, pi], computed by the half-angle arctangent form.
inline double arg_principal(cplx z) {
  const double re = z.real();
  const double im = z.imag();
  if (std::abs(im) <= real_axis_threshold) {
    if (re > 0) return 0.0;
    if (re < 0) return pi;
    throw domain_error("arg_principal: argument is zero");
  }
  const double r = std::abs(z);
  // re + |z| loses everything near the negative axis; use im^2/(|z| - re) there.
  const double t = re >= 0 ? im / (re + r) : (r - re) / im;
  return 2.0 * std::atan(t);
}

/// +1 when Arg z <= 0, -1 otherwise.
inline int sigma(cplx z) { return arg_principal(z) <= 0.0 ? 1 : -1; }

/// Principal logarithm log|z| + i Arg z.
inline cplx log_principal(cplx z) {
  return {std::log(std::abs(z)), arg_principal(z)};
}

/// z^lambda = exp(lambda log|z| + i lambda Arg z); 0^lambda = 0 when Re lambda > 0.
inline cplx cpow(cplx z, cplx lambda) {
  if (z == cplx(0.0, 0.0)) {
    if (lambda.real() > 0) return {0.0, 0.0};
    throw domain_error("cpow: zero base with Re(lambda) <= 0");
  }
  return std::exp(lambda * log_principal(z));
}

}  // namespace twreg
