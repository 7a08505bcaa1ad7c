#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"

namespace twreg {

namespace detail {

// Godfrey's coefficients, g = 607/128.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

inline constexpr double pole_tolerance = 1e-12;

// sin(pi z) with the real part reduced exactly, so integers give exact zeros.
inline cplx sin_pi(cplx z) {
  const double k = std::round(z.real());
  const double r = z.real() - k;
  const double sign = std::fmod(std::abs(k), 2.0) == 1.0 ? -1.0 : 1.0;
  const double y = pi * z.imag();
  const cplx s(std::sin(pi * r) * std::cosh(y), std::cos(pi * r) * std::sinh(y));
  return sign * s;
}

// Valid for Re z >= 1/2.
inline cplx lanczos_log_gamma(cplx z) {
  const cplx zm1 = z - 1.0;
  cplx series(lanczos_c[0], 0.0);
  for (std::size_t k = 1; k < lanczos_c.size(); ++k)
    series += lanczos_c[k] / (zm1 + static_cast<double>(k));
  const cplx t = zm1 + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

inline long nearest_nonpositive_integer(cplx z, double tol) {
  if (z.real() > 0.5 || std::abs(z.imag()) > tol) return 1;
  const double k = std::round(z.real());
  if (std::abs(z.real() - k) <= tol && k <= 0) return static_cast<long>(k);
  return 1;
}

}  // namespace detail

/// Euler Gamma function of a complex argument.
inline cplx gamma(cplx z) {
  const long pole = detail::nearest_nonpositive_integer(z, detail::pole_tolerance);
  if (pole <= 0)
    throw pole_error("gamma: argument within tolerance of pole " + std::to_string(pole), pole);
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return pi / (detail::sin_pi(z) * std::exp(detail::lanczos_log_gamma(1.0 - z)));
  }
  return std::exp(detail::lanczos_log_gamma(z));
}

/// 1/Gamma(z), entire; exactly zero at the non-positive integers.
inline cplx recip_gamma(cplx z) {
  if (z.real() < 0.5)
    return detail::sin_pi(z) * std::exp(detail::lanczos_log_gamma(1.0 - z)) / pi;
  return std::exp(-detail::lanczos_log_gamma(z));
}

/// Rising factorial (p)_k.
inline cplx pochhammer(cplx p, unsigned k) {
  cplx r(1.0, 0.0);
  for (unsigned j = 0; j < k; ++j) r *= p + static_cast<double>(j);
  return r;
}

}  // namespace twreg
