#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "twreg/branchcut.hpp"
#include "twreg/specfun/asymptotic_eval.hpp"
#include "twreg/specfun/gamma.hpp"
#include "twreg/specfun/kummer.hpp"

namespace twreg {

namespace detail {

inline const double sqrt_pi = std::sqrt(pi);

struct ThetaTerms {
  cplx even;  // sqrt(pi) Phi(p,1/2;z^2) / Gamma(p+1/2)
  cplx odd;   // -2 sqrt(pi) z Phi(p+1/2,3/2;z^2) / Gamma(p)
  cplx d_even;
  cplx d_odd;
};

inline ThetaTerms theta_terms(cplx p, cplx z) {
  const cplx w = z * z;
  const cplx ga = recip_gamma(p + 0.5);
  const cplx gb = recip_gamma(p);
  ThetaTerms t{};
  if (ga != cplx(0.0, 0.0)) {
    const auto [f, df] = phi_with_derivative(p, 0.5, w);
    t.even = sqrt_pi * ga * f;
    t.d_even = sqrt_pi * ga * 2.0 * z * df;
  }
  if (gb != cplx(0.0, 0.0)) {
    const auto [g, dg] = phi_with_derivative(p + 0.5, 1.5, w);
    t.odd = -2.0 * sqrt_pi * gb * z * g;
    t.d_odd = -2.0 * sqrt_pi * gb * (g + 2.0 * w * dg);
  }
  return t;
}

struct ThetaAsymSum {
  cplx value;
  cplx deriv;
  double smallest;  // magnitude of the first omitted term
  bool exact;       // the series terminated
};

// Optimally truncated large-z expansion z^{-2p} sum (-1)^k (p)_k (p+1/2)_k z^{-2k} / k!.
inline ThetaAsymSum theta_asym_optimal(cplx p, cplx z) {
  const cplx zm2 = 1.0 / (z * z);
  const cplx lead = cpow(z, -2.0 * p);
  cplx term(1.0, 0.0);
  cplx sum(0.0, 0.0), dsum(0.0, 0.0);
  double prev = std::abs(term);
  for (int k = 0; k < 400; ++k) {
    sum += term;
    const double kd = k;
    dsum += term * (-2.0 * p - 2.0 * kd);
    const cplx next = term * (-(p + kd) * (p + 0.5 + kd) / (kd + 1.0)) * zm2;
    const double an = std::abs(next);
    if (an == 0.0) return {lead * sum, lead * dsum / z, 0.0, true};
    if (an > prev || an <= 1e-17 * std::abs(sum)) return {lead * sum, lead * dsum / z, an, false};
    prev = an;
    term = next;
  }
  return {lead * sum, lead * dsum / z, prev, false};
}

// Continue (y, y') of y'' - 2 z y' - 4 p y = 0 from z0 to z1 along a straight path.
inline std::pair<cplx, cplx> hermite_taylor(cplx p, cplx z0, cplx y, cplx dy, cplx z1) {
  const cplx span = z1 - z0;
  const double len = std::abs(span);
  if (len == 0.0) return {y, dy};
  const cplx dir = span / len;
  double done = 0.0;
  cplx zc = z0;
  while (done < len) {
    const double step = std::min({0.5, 1.0 / std::max(1.0, std::abs(zc)), len - done});
    const cplx h = dir * step;
    cplx a0 = y, a1 = dy;
    cplx val = a0 + a1 * h;
    cplx der = a1;
    cplx hp = h;
    const double scale = std::abs(y) + std::abs(dy) * step;
    int small = 0;
    for (int n = 0; n < 400; ++n) {
      const double nd = n;
      const cplx a2 = (2.0 * zc * (nd + 1.0) * a1 + (2.0 * nd + 4.0 * p) * a0) / ((nd + 1.0) * (nd + 2.0));
      der += (nd + 2.0) * a2 * hp;
      hp *= h;
      const cplx t = a2 * hp;
      val += t;
      a0 = a1;
      a1 = a2;
      if (std::abs(t) <= 1e-18 * scale) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    y = val;
    dy = der;
    zc += h;
    done += step;
  }
  return {y, dy};
}

inline constexpr double theta_cancellation_limit = 1e4;

}  // namespace detail

namespace detail {

inline double theta_start_radius(cplx p) { return std::max(7.0, 2.0 * std::sqrt(std::abs(p)) + 4.0); }

// Continue from a point (X, Im z) with large X where the expansion is accurate; along the
// horizontal path Re z^2 decreases until Re z = 0, so the e^{z^2} solution stays recessive.
inline std::pair<cplx, cplx> theta_horizontal(cplx p, cplx z) {
  const double r0 = theta_start_radius(p);
  const double y = z.imag();
  double X = std::max(z.real(), std::sqrt(std::max(0.0, r0 * r0 - y * y)));
  for (int i = 0; i < 40; ++i) {
    const cplx zs(X, y);
    const auto a = theta_asym_optimal(p, zs);
    if (a.exact || a.smallest <= 1e-16 * std::abs(a.value / cpow(zs, -2.0 * p)))
      return hermite_taylor(p, zs, a.value, a.deriv, z);
    X = std::max(1.25 * X, X + 1.0);
  }
  throw accuracy_error("theta: no accurate starting radius for the expansion");
}

}  // namespace detail

/// Theta(p; z) and its z-derivative.
inline std::pair<cplx, cplx> theta_with_derivative(cplx p, cplx z) {
  if (z.real() < 0.0) {
    // Theta(p;z) + Theta(p;-z) = 2 sqrt(pi) Phi(p,1/2;z^2) / Gamma(p+1/2)
    const auto [t, dt] = theta_with_derivative(p, -z);
    const cplx ga = recip_gamma(p + 0.5);
    cplx e(0.0, 0.0), de(0.0, 0.0);
    if (ga != cplx(0.0, 0.0)) {
      const auto [f, df] = phi_with_derivative(p, 0.5, z * z);
      e = 2.0 * detail::sqrt_pi * ga * f;
      de = 2.0 * detail::sqrt_pi * ga * 2.0 * z * df;
    }
    const cplx v = e - t;
    if (std::abs(e) + std::abs(t) <= 1e3 * std::abs(v) || z.real() * z.real() > 4.0) return {v, de + dt};
    return detail::theta_horizontal(p, z);
  }
  const double r = std::abs(z);
  if (r >= detail::theta_start_radius(p)) {
    const auto a = detail::theta_asym_optimal(p, z);
    if (a.exact || a.smallest <= 1e-15 * std::abs(a.value / cpow(z, -2.0 * p)))
      return {a.value, a.deriv};
  }
  const auto t = detail::theta_terms(p, z);
  const cplx v = t.even + t.odd;
  if (r <= 1.0 || std::abs(t.even) + std::abs(t.odd) <= detail::theta_cancellation_limit * std::abs(v))
    return {v, t.d_even + t.d_odd};
  return detail::theta_horizontal(p, z);
}

inline cplx theta(cplx p, cplx z) { return theta_with_derivative(p, z).first; }

/// Theta straight from its defining Phi combination.
inline cplx theta_series(cplx p, cplx z) {
  const auto t = detail::theta_terms(p, z);
  return t.even + t.odd;
}

/// Large-|z| expansion of Theta truncated after N+1 terms.
inline AsymptoticEval theta_asym(cplx p, cplx z, int N, double eps = default_sector_eps) {
  if (z == cplx(0.0, 0.0)) throw domain_error("theta_asym: z must be nonzero");
  AsymptoticEval out;
  out.terms_used = N + 1;
  out.sector_ok = std::abs(arg_principal(z)) <= pi / 2.0 - eps;
  const cplx lead = cpow(z, -2.0 * p);
  const cplx zm2 = 1.0 / (z * z);
  cplx term(1.0, 0.0);
  cplx sum(0.0, 0.0);
  for (int k = 0; k <= N; ++k) {
    sum += term;
    const double kd = k;
    term *= -(p + kd) * (p + 0.5 + kd) / (kd + 1.0) * zm2;
  }
  out.value = lead * sum;
  out.est_remainder = std::abs(lead * term);
  return out;
}

/// Relative residual of Theta(p) = (2p+3/2+z^2) Theta(p+1) - (p+1)(p+3/2) Theta(p+2).
inline double theta_recurrence_residual(cplx p, cplx z) {
  const cplx t0 = theta(p, z);
  const cplx t1 = -(2.0 * p + 1.5 + z * z) * theta(p + 1.0, z);
  const cplx t2 = (p + 1.0) * (p + 1.5) * theta(p + 2.0, z);
  const double scale = std::abs(t0) + std::abs(t1) + std::abs(t2);
  return scale == 0.0 ? 0.0 : std::abs(t0 + t1 + t2) / scale;
}

/// Theta(-n; z) as the terminating sum z^{2n} sum (-1)^k (-n)_k (1/2-n)_k z^{-2k} / k!.
inline cplx theta_poly_even(unsigned n, cplx z) {
  cplx sum(0.0, 0.0);
  cplx c(1.0, 0.0);
  const double nd = n;
  for (unsigned k = 0; k <= n; ++k) {
    sum += c * std::pow(z, static_cast<int>(2 * (n - k)));
    const double kd = k;
    c *= -(-nd + kd) * (0.5 - nd + kd) / (kd + 1.0);
  }
  return sum;
}

/// Theta(-1/2-n; z) as the terminating sum z^{2n+1} sum (-1)^k (-n)_k (-1/2-n)_k z^{-2k} / k!.
inline cplx theta_poly_odd(unsigned n, cplx z) {
  cplx sum(0.0, 0.0);
  cplx c(1.0, 0.0);
  const double nd = n;
  for (unsigned k = 0; k <= n; ++k) {
    sum += c * std::pow(z, static_cast<int>(2 * (n - k) + 1));
    const double kd = k;
    c *= -(-nd + kd) * (-0.5 - nd + kd) / (kd + 1.0);
  }
  return sum;
}

}  // namespace twreg
