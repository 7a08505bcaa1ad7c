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

enum class AiryKind { Ai, Bi };
enum class AiryRegime { RightSector, LeftSector };

struct AiryPair {
  cplx value;
  cplx deriv;
};

namespace detail {

inline const cplx omega = std::polar(1.0, 2.0 * pi / 3.0);
inline const cplx omega2 = std::polar(1.0, -2.0 * pi / 3.0);

// f and g of Ai = f - g, Bi = sqrt(3)(f + g), with derivatives.
struct AiryFG {
  cplx f, df, g, dg;
};

inline AiryFG airy_fg_series(cplx z) {
  const double f0 = 1.0 / (std::cbrt(9.0) * std::real(gamma(2.0 / 3.0)));
  const double g0 = 1.0 / (std::cbrt(81.0) * std::real(gamma(4.0 / 3.0)));
  const cplx z3 = z * z * z;
  AiryFG r{};
  cplx tf(f0, 0.0), tg = g0 * z;
  r.f = tf;
  r.g = tg;
  r.df = 0.0;
  r.dg = g0;
  for (int k = 0; k < 2000; ++k) {
    const double kd = k;
    tf *= z3 / (9.0 * (kd + 1.0) * (kd + 2.0 / 3.0));
    tg *= z3 / (9.0 * (kd + 1.0) * (kd + 4.0 / 3.0));
    r.f += tf;
    r.g += tg;
    // d/dz z^{3k} = 3k z^{3k-1}; d/dz z^{3k+1} = (3k+1) z^{3k}
    if (z != cplx(0.0, 0.0)) {
      r.df += 3.0 * (kd + 1.0) * tf / z;
      r.dg += (3.0 * (kd + 1.0) + 1.0) * tg / z;
    }
    const double scale = std::abs(r.f) + std::abs(r.g);
    if (std::abs(tf) + std::abs(tg) <= 1e-17 * scale && kd > std::abs(z)) break;
  }
  return r;
}

inline constexpr double airy_series_radius = 2.0;
inline constexpr double airy_asym_radius = 10.0;

// Optimally truncated large-|z| expansions of Ai and Ai' (|arg z| < pi).
inline AiryPair airy_ai_asym_full(cplx z) {
  const cplx zeta = 2.0 / 3.0 * cpow(z, 1.5);
  const cplx e = std::exp(-zeta) / (2.0 * std::sqrt(pi));
  const cplx z14 = cpow(z, 0.25);
  cplx u(1.0, 0.0), v(1.0, 0.0);
  cplx su(0.0, 0.0), sv(0.0, 0.0);
  cplx zp(1.0, 0.0);  // (-zeta)^{-k}
  double prev = 2.0;
  for (int k = 0; k < 200; ++k) {
    const cplx tu = u * zp, tv = v * zp;
    const double mag = std::abs(tu) + std::abs(tv);
    if (k > 0 && (mag > prev || mag <= 1e-17)) break;
    su += tu;
    sv += tv;
    prev = mag;
    const double kd = k + 1;
    u *= (6.0 * kd - 5.0) * (6.0 * kd - 3.0) * (6.0 * kd - 1.0) / ((2.0 * kd - 1.0) * 216.0 * kd);
    v = -(6.0 * kd + 1.0) / (6.0 * kd - 1.0) * u;
    zp /= -zeta;
  }
  return {e / z14 * su, -e * z14 * sv};
}

inline AiryPair airy_taylor(cplx z0, cplx w, cplx dw, cplx z1) {
  const cplx span = z1 - z0;
  const double len = std::abs(span);
  if (len == 0.0) return {w, dw};
  const cplx dir = span / len;
  double done = 0.0;
  cplx zc = z0;
  while (done < len) {
    const double step = std::min({0.5, 1.0 / std::sqrt(std::max(1.0, std::abs(zc))), len - done});
    const cplx h = dir * step;
    cplx am1(0.0, 0.0), a0 = w, a1 = dw;
    cplx val = a0 + a1 * h;
    cplx der = a1;
    cplx hp = h;
    const double scale = std::abs(w) + std::abs(dw) * step;
    int small = 0;
    for (int n = 0; n < 400; ++n) {
      const double nd = n;
      const cplx a2 = (zc * a0 + am1) / ((nd + 2.0) * (nd + 1.0));
      der += (nd + 2.0) * a2 * hp;
      hp *= h;
      const cplx t = a2 * hp;
      val += t;
      am1 = a0;
      a0 = a1;
      a1 = a2;
      if (std::abs(t) <= 1e-18 * scale) {
        if (++small >= 3) break;
      } else {
        small = 0;
      }
    }
    w = val;
    dw = der;
    zc += h;
    done += step;
  }
  return {w, dw};
}

}  // namespace detail

/// Ai(z) and Ai'(z).
inline AiryPair airy_ai_pair(cplx z) {
  const double r = std::abs(z);
  if (r <= detail::airy_series_radius) {
    const auto s = detail::airy_fg_series(z);
    return {s.f - s.g, s.df - s.dg};
  }
  const double a = std::abs(arg_principal(z));
  if (a > 2.0 * pi / 3.0 + 1e-12) {
    const auto p1 = airy_ai_pair(detail::omega * z);
    const auto p2 = airy_ai_pair(detail::omega2 * z);
    return {-detail::omega * p1.value - detail::omega2 * p2.value,
            -detail::omega2 * p1.deriv - detail::omega * p2.deriv};
  }
  if (r >= detail::airy_asym_radius) return detail::airy_ai_asym_full(z);
  const cplx dir = z / r;
  if (a < pi / 3.0) {
    const cplx zs = dir * detail::airy_asym_radius;
    const auto s = detail::airy_ai_asym_full(zs);
    return detail::airy_taylor(zs, s.value, s.deriv, z);
  }
  const cplx zs = dir * detail::airy_series_radius;
  const auto s = detail::airy_fg_series(zs);
  return detail::airy_taylor(zs, s.f - s.g, s.df - s.dg, z);
}

/// Bi(z) and Bi'(z).
inline AiryPair airy_bi_pair(cplx z) {
  if (std::abs(z) <= detail::airy_series_radius) {
    const auto s = detail::airy_fg_series(z);
    const double r3 = std::sqrt(3.0);
    return {r3 * (s.f + s.g), r3 * (s.df + s.dg)};
  }
  // Bi(z) = e^{i pi/6} Ai(omega z) + e^{-i pi/6} Ai(omega^2 z)
  const cplx e1 = std::polar(1.0, pi / 6.0), e2 = std::polar(1.0, -pi / 6.0);
  const auto p1 = airy_ai_pair(detail::omega * z);
  const auto p2 = airy_ai_pair(detail::omega2 * z);
  return {e1 * p1.value + e2 * p2.value,
          e1 * detail::omega * p1.deriv + e2 * detail::omega2 * p2.deriv};
}

inline cplx airy_ai(cplx z) { return airy_ai_pair(z).value; }
inline cplx airy_bi(cplx z) { return airy_bi_pair(z).value; }

/// Ai and Bi from the two power series alone.
inline cplx airy_ai_series(cplx z) {
  const auto s = detail::airy_fg_series(z);
  return s.f - s.g;
}
inline cplx airy_bi_series(cplx z) {
  const auto s = detail::airy_fg_series(z);
  return std::sqrt(3.0) * (s.f + s.g);
}

/// Leading-order Airy forms; throws sector_error outside the stated sector.
inline AsymptoticEval airy_asym(AiryKind which, cplx z, AiryRegime regime,
                                double eps = default_sector_eps) {
  if (z == cplx(0.0, 0.0)) throw domain_error("airy_asym: z must be nonzero");
  AsymptoticEval out;
  out.terms_used = 1;
  const double sp = std::sqrt(pi);
  const cplx i(0.0, 1.0);
  if (regime == AiryRegime::RightSector) {
    const double a = arg_principal(z);
    if (which == AiryKind::Ai) {
      if (std::abs(a) > pi - eps) throw sector_error("airy_asym: Ai right sector needs |Arg z| <= pi - eps");
      const cplx zeta = 2.0 / 3.0 * cpow(z, 1.5);
      out.value = cpow(z, -0.25) / (2.0 * sp) * std::exp(-zeta);
      out.est_remainder = std::abs(out.value) * 5.0 / (72.0 * std::abs(zeta));
    } else {
      if (a < -pi / 3.0 + eps || a > pi / 3.0 + eps)
        throw sector_error("airy_asym: Bi right sector needs -pi/3 + eps <= Arg z <= pi/3 + eps");
      const cplx zeta = 2.0 / 3.0 * cpow(z, 1.5);
      const cplx pre = std::polar(1.0, pi / 4.0) * cpow(z, -0.25) / std::sqrt(2.0 * pi);
      out.value = pre * ((1.0 - i) * std::exp(zeta) + (1.0 + i) / 2.0 * std::exp(-zeta));
      out.est_remainder = std::abs(out.value) * 5.0 / (72.0 * std::abs(zeta));
    }
  } else {
    if (std::abs(arg_principal(-z)) > 2.0 * pi / 3.0 - eps)
      throw sector_error("airy_asym: left sector needs |Arg(-z)| <= 2pi/3 - eps");
    const cplx mz = -z;
    const cplx phase = i * (2.0 / 3.0) * cpow(mz, 1.5);
    const cplx pre = cpow(mz, -0.25) / (2.0 * std::sqrt(2.0 * pi));
    if (which == AiryKind::Ai)
      out.value = pre * ((1.0 - i) * std::exp(phase) + (1.0 + i) * std::exp(-phase));
    else
      out.value = pre * ((1.0 + i) * std::exp(phase) + (1.0 - i) * std::exp(-phase));
    out.est_remainder = std::abs(out.value) * 5.0 / (72.0 * std::abs(phase));
  }
  out.sector_ok = true;
  return out;
}

}  // namespace twreg
