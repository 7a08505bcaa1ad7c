#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/specfun/gamma.hpp"
#include "twreg/verify/report.hpp"

namespace twreg::verify {

namespace detail {

// Endpoint-singular integrals on [a, b], real and imaginary parts separately.
inline cplx integrate_singular(const std::function<cplx(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double re = ts.integrate([&](double t) { return f(t).real(); }, a, b, 1e-14);
  const double im = ts.integrate([&](double t) { return f(t).imag(); }, a, b, 1e-14);
  return {re, im};
}

inline cplx integrate_smooth(const std::function<cplx(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, 1e-14);
}

}  // namespace detail

/// e^{i theta p} int_0^inf t^{p-1} (1 + e^{i theta} t)^{-(p+q)} dt against Gamma(p)Gamma(q)/Gamma(p+q).
inline CheckReport quad_beta_invariance(cplx p, cplx q, double theta) {
  if (p.real() <= 0.0 || q.real() <= 0.0) throw domain_error("quad_beta_invariance: need Re p, Re q > 0");
  if (std::abs(theta) >= pi) throw domain_error("quad_beta_invariance: need |theta| < pi");
  const cplx rot = std::exp(cplx(0.0, theta));
  // [0, 1] directly; [1, inf) through t = 1/u, giving u^{q-1} (u + e^{i theta})^{-(p+q)}.
  auto lower = [&](double t) { return cpow(cplx(t, 0.0), p - 1.0) * cpow(1.0 + rot * t, -(p + q)); };
  auto upper = [&](double u) { return cpow(cplx(u, 0.0), q - 1.0) * cpow(u + rot, -(p + q)); };
  const cplx integral = detail::integrate_singular(lower, 0.0, 1.0) + detail::integrate_singular(upper, 0.0, 1.0);
  const cplx lhs = std::exp(cplx(0.0, theta) * p) * integral;
  const cplx rhs = gamma(p) * gamma(q) / gamma(p + q);
  return CheckReport("quad_beta_invariance", std::abs(lhs - rhs) / std::abs(rhs), 1e-8);
}

namespace detail {

// z^p int_0^upper t^{p-1} e^{-t z} dt
inline cplx laplace_partial(cplx p, cplx z, double upper) {
  auto f = [&](double t) { return cpow(cplx(t, 0.0), p - 1.0) * std::exp(-t * z); };
  const double split = std::min(1.0, upper);
  cplx s = integrate_singular(f, 0.0, split);
  if (upper > split) s += integrate_smooth(f, split, upper);
  return cpow(z, p) * s;
}

}  // namespace detail

/// z^p int_0^inf t^{p-1} e^{-tz} dt = Gamma(p), with the tail cut where it is below 1e-16.
inline CheckReport quad_laplace(cplx p, cplx z) {
  if (p.real() <= 0.0 || z.real() <= 0.0) throw domain_error("quad_laplace: need Re p, Re z > 0");
  // t^{Re p - 1} e^{-t Re z} < 1e-16 beyond T.
  double T = 1.0;
  while (std::pow(T, p.real() - 1.0) * std::exp(-T * z.real()) / z.real() > 1e-18) T *= 1.5;
  const cplx lhs = detail::laplace_partial(p, z, T);
  const cplx rhs = gamma(p);
  CheckReport r("quad_laplace", std::abs(lhs - rhs) / std::abs(rhs), 1e-9);
  r.with("cutoff", std::to_string(T));
  return r;
}

/// Remainder |z^p int_0^1 t^{p-1} e^{-tz} dt - Gamma(p)| at the sector edge Arg z = pi/2 - eps,
/// scaled by |z|^{Re p - 1} e^{-sin(eps)|z|}. C is fitted at |z| = 10, 20 and checked at 40.
inline CheckReport tail_remainder(cplx p, double eps) {
  if (p.real() <= 0.0) throw domain_error("tail_remainder: need Re p > 0");
  const double arg = pi / 2.0 - eps;
  auto scaled = [&](double R) {
    const cplx z = std::polar(R, arg);
    const double rem = std::abs(detail::laplace_partial(p, z, 1.0) - gamma(p));
    return rem / (std::pow(R, p.real() - 1.0) * std::exp(-std::sin(eps) * R));
  };
  const double s10 = scaled(10.0), s20 = scaled(20.0), s40 = scaled(40.0);
  const double C = 2.0 * std::max(s10, s20);
  CheckReport r("tail_remainder", s40 / C, 1.0);
  r.with("C", std::to_string(C)).with("scaled_40", std::to_string(s40));
  return r;
}

}  // namespace twreg::verify
