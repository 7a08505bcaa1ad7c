#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/specfun/asymptotic_eval.hpp"
#include "twreg/specfun/gamma.hpp"

namespace twreg {

inline constexpr int series_term_cap = 2000;
inline constexpr double series_term_tol = 1e-16;

struct SeriesResult {
  cplx value;
  double abs_sum;  // sum of term magnitudes, a cancellation gauge
  int terms;
};

namespace detail {

inline void require_q_regular(cplx q) {
  const double k = std::round(q.real());
  if (k <= 0 && std::abs(q - cplx(k, 0.0)) <= 1e-10)
    throw domain_error("phi: q is within tolerance of a non-positive integer");
}

}  // namespace detail

/// Raw power series of the confluent hypergeometric function 1F1(p; q; z).
inline SeriesResult phi_series_detail(cplx p, cplx q, cplx z) {
  detail::require_q_regular(q);
  cplx term(1.0, 0.0);
  cplx sum = term;
  double abs_sum = 1.0;
  for (int k = 0; k < series_term_cap; ++k) {
    const double kd = k;
    const cplx ratio = (p + kd) / (q + kd) * z / (kd + 1.0);
    term *= ratio;
    if (term == cplx(0.0, 0.0)) return {sum, abs_sum, k + 1};
    sum += term;
    const double at = std::abs(term);
    abs_sum += at;
    const bool shrinking = std::abs(ratio) < 0.5;
    if (shrinking && (at <= series_term_tol * std::abs(sum) || at <= 1e-19 * abs_sum))
      return {sum, abs_sum, k + 2};
  }
  throw accuracy_error("phi_series: no convergence within the term cap");
}

inline cplx phi_series(cplx p, cplx q, cplx z) { return phi_series_detail(p, q, z).value; }

namespace detail {

// Continue (u, u') of z u'' + (q - z) u' - p u = 0 from z0 to z1 along a straight path.
inline std::pair<cplx, cplx> kummer_taylor(cplx p, cplx q, cplx z0, cplx u, cplx du, cplx z1) {
  const cplx span = z1 - z0;
  const double len = std::abs(span);
  if (len == 0.0) return {u, du};
  const cplx dir = span / len;
  double done = 0.0;
  cplx zc = z0;
  while (done < len) {
    const double step = std::min({1.5, 0.5 * std::abs(zc), len - done});
    const cplx h = dir * step;
    cplx a0 = u, a1 = du;
    cplx val = a0 + a1 * h;
    cplx der = a1;
    cplx hp = h;  // h^(n+1) for the value, h^n for the derivative
    const double scale = std::abs(u) + std::abs(du) * step;
    int small = 0;
    for (int n = 0; n < 400; ++n) {
      const double nd = n;
      const cplx a2 =
          ((nd + p) * a0 - (nd + 1.0) * (nd + q - zc) * a1) / (zc * (nd + 2.0) * (nd + 1.0));
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
    u = val;
    du = der;
    zc += h;
    done += step;
  }
  return {u, du};
}

inline std::pair<cplx, cplx> phi_series_pair(cplx p, cplx q, cplx z) {
  const cplx v = phi_series(p, q, z);
  const cplx d = p == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : (p / q) * phi_series(p + 1.0, q + 1.0, z);
  return {v, d};
}

inline constexpr double phi_series_radius = 2.0;
inline constexpr double phi_cancellation_limit = 1e3;

}  // namespace detail

/// 1F1(p; q; z) and its z-derivative, accurate beyond the range of the raw series.
inline std::pair<cplx, cplx> phi_with_derivative(cplx p, cplx q, cplx z) {
  detail::require_q_regular(q);
  const double r = std::abs(z);
  if (r <= detail::phi_series_radius) return detail::phi_series_pair(p, q, z);
  if (z.real() < 0.0) {
    // Kummer transformation moves the argument into the right half-plane.
    const auto [f, df] = phi_with_derivative(q - p, q, -z);
    const cplx e = std::exp(z);
    return {e * f, e * (f - df)};
  }
  if (r <= 500.0) {
    const SeriesResult s = phi_series_detail(p, q, z);
    if (s.abs_sum <= detail::phi_cancellation_limit * std::abs(s.value)) {
      const cplx d =
          p == cplx(0.0, 0.0) ? cplx(0.0, 0.0) : (p / q) * phi_series(p + 1.0, q + 1.0, z);
      return {s.value, d};
    }
  }
  const cplx z0 = z * (detail::phi_series_radius / r);
  const auto [u0, du0] = detail::phi_series_pair(p, q, z0);
  return detail::kummer_taylor(p, q, z0, u0, du0, z);
}

inline cplx phi(cplx p, cplx q, cplx z) { return phi_with_derivative(p, q, z).first; }

/// Large-|z| expansion of 1F1 truncated after N+1 terms.
inline AsymptoticEval phi_asym(cplx p, cplx q, cplx z, int N, double eps = default_sector_eps) {
  if (z == cplx(0.0, 0.0)) throw domain_error("phi_asym: z must be nonzero");
  AsymptoticEval out;
  out.terms_used = N + 1;
  out.sector_ok = std::abs(arg_principal(z)) <= pi / 2.0 - eps;
  const cplx rg = recip_gamma(p);
  if (rg == cplx(0.0, 0.0)) {
    out.degenerate = true;
    return out;
  }
  const cplx pref = std::exp(z) * cpow(z, p - q) * gamma(q) * rg;
  cplx term(1.0, 0.0);
  cplx sum(0.0, 0.0);
  for (int k = 0; k <= N; ++k) {
    sum += term;
    const double kd = k;
    term *= (q - p + kd) * (1.0 - p + kd) / ((kd + 1.0) * z);
  }
  out.value = pref * sum;
  out.est_remainder = std::abs(pref * term);
  return out;
}

/// |Phi(p,q;z) - e^z Phi(q-p,q;-z)| / (1 + |Phi(p,q;z)|), both sides from the raw series.
inline double kummer_check(cplx p, cplx q, cplx z) {
  const cplx lhs = phi_series(p, q, z);
  const cplx rhs = std::exp(z) * phi_series(q - p, q, -z);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

/// Contiguous relation in q: Phi(p,q) - (q+z)/q Phi(p,q+1) + (q+1-p) z/(q(q+1)) Phi(p,q+2).
inline double phi_recurrence_q_residual(cplx p, cplx q, cplx z) {
  const cplx t0 = phi_series(p, q, z);
  const cplx t1 = -(q + z) / q * phi_series(p, q + 1.0, z);
  const cplx t2 = (q + 1.0 - p) * z / (q * (q + 1.0)) * phi_series(p, q + 2.0, z);
  return std::abs(t0 + t1 + t2) / (std::abs(t0) + std::abs(t1) + std::abs(t2));
}

/// Contiguous relation in p: Phi(p,q) - Phi(p+1,q) + (z/q) Phi(p+1,q+1).
inline double phi_recurrence_p_residual(cplx p, cplx q, cplx z) {
  const cplx t0 = phi_series(p, q, z);
  const cplx t1 = -phi_series(p + 1.0, q, z);
  const cplx t2 = z / q * phi_series(p + 1.0, q + 1.0, z);
  return std::abs(t0 + t1 + t2) / (std::abs(t0) + std::abs(t1) + std::abs(t2));
}

}  // namespace twreg
