#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/specfun.hpp"

namespace twreg {

/// Solutions of the Hermite-Weber equation w'' = (z^2 - lambda) w with derivatives.
struct WeberPair {
  cplx w1, w2, dw1, dw2, d2w1, d2w2;
};

namespace detail {

// f = e^{-z^2/2} P(z), f' = E (P' - z P), f'' = E (P'' - 2 z P' + (z^2 - 1) P).
inline void gaussian_product(cplx z, cplx P, cplx dP, cplx d2P, cplx& f, cplx& df, cplx& d2f) {
  const cplx E = std::exp(-0.5 * z * z);
  f = E * P;
  df = E * (dP - z * P);
  d2f = E * (d2P - 2.0 * z * dP + (z * z - 1.0) * P);
}

inline cplx phi_second_derivative(cplx p, cplx q, cplx w) {
  if (p == cplx(0.0, 0.0) || p == cplx(-1.0, 0.0)) return {0.0, 0.0};
  return p * (p + 1.0) / (q * (q + 1.0)) * phi(p + 2.0, q + 2.0, w);
}

}  // namespace detail

inline WeberPair weber_w(cplx lambda, cplx z) {
  const cplx a = (1.0 - lambda) / 4.0;
  const cplx b = (3.0 - lambda) / 4.0;
  const cplx w = z * z;
  WeberPair r{};
  {
    const auto [f, df] = phi_with_derivative(a, 0.5, w);
    const cplx d2f = detail::phi_second_derivative(a, 0.5, w);
    const cplx P = f;
    const cplx dP = 2.0 * z * df;
    const cplx d2P = 2.0 * df + 4.0 * w * d2f;
    detail::gaussian_product(z, P, dP, d2P, r.w1, r.dw1, r.d2w1);
  }
  {
    const auto [g, dg] = phi_with_derivative(b, 1.5, w);
    const cplx d2g = detail::phi_second_derivative(b, 1.5, w);
    const cplx P = z * g;
    const cplx dP = g + 2.0 * w * dg;
    const cplx d2P = 6.0 * z * dg + 4.0 * z * w * d2g;
    detail::gaussian_product(z, P, dP, d2P, r.w2, r.dw2, r.d2w2);
  }
  return r;
}

inline cplx weber_wronskian(cplx lambda, cplx z) {
  const auto r = weber_w(lambda, z);
  return r.w1 * r.dw2 - r.dw1 * r.w2;
}

/// max over w1, w2 of |w'' - (z^2 - lambda) w| / (|w''| + |(z^2 - lambda) w|).
inline double weber_ode_residual(cplx lambda, cplx z) {
  const auto r = weber_w(lambda, z);
  const cplx c = z * z - lambda;
  auto rel = [&](cplx d2, cplx v) {
    const double s = std::abs(d2) + std::abs(c * v);
    return s == 0.0 ? 0.0 : std::abs(d2 - c * v) / s;
  };
  return std::max(rel(r.d2w1, r.w1), rel(r.d2w2, r.w2));
}

/// Parameters a, b, a', b' and the reciprocal Gamma weights attached to lambda.
struct WeberWeights {
  cplx a, b, ap, bp;
  cplx Ga, Gb, Gap, Gbp;  // 1/Gamma of each
  explicit WeberWeights(cplx lambda)
      : a((1.0 - lambda) / 4.0),
        b((3.0 - lambda) / 4.0),
        ap((1.0 + lambda) / 4.0),
        bp((3.0 + lambda) / 4.0),
        Ga(recip_gamma(a)),
        Gb(recip_gamma(b)),
        Gap(recip_gamma(ap)),
        Gbp(recip_gamma(bp)) {}

  /// Common magnitude against which the Gamma-weighted brackets are tested for vanishing.
  double bracket_scale(cplx c1, cplx c2) const {
    return std::abs(c1) * (std::abs(Ga) + std::abs(Gap)) + std::abs(c2) * (std::abs(Gb) + std::abs(Gbp)) / 2.0;
  }
};

/// Relative residual of 1/(G(a)G(b')) +- i/(G(a')G(b)) = e^{+-i pi a'}/pi, worst sign.
inline double weber_gamma_identity_residual(cplx lambda) {
  const WeberWeights g(lambda);
  const cplx i(0.0, 1.0);
  double worst = 0.0;
  for (double s : {1.0, -1.0}) {
    const cplx t1 = g.Ga * g.Gbp;
    const cplx t2 = s * i * g.Gap * g.Gb;
    const cplx rhs = std::exp(s * i * pi * g.ap) / pi;
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(rhs);
    worst = std::max(worst, std::abs(t1 + t2 - rhs) / scale);
  }
  return worst;
}

/// Identities linking w1, w2 to Theta.
enum class WeberThetaIdentity {
  RecessiveReal,  // w1 G(b) -+ 2 w2 G(a) = e^{-z^2/2} Theta(a; +-z) / sqrt(pi)
  RecessiveImag,  // w1 G(b') +- 2i w2 G(a') = e^{z^2/2} Theta(a'; -+iz) / sqrt(pi)
  FirstInTheta,   // w1 in terms of Theta(a; +-z) and Theta(a'; -+iz)
  SecondInTheta,  // w2 in terms of the same pair
};

inline double weber_theta_identity_residual(cplx lambda, cplx z, WeberThetaIdentity which) {
  const WeberWeights g(lambda);
  const auto w = weber_w(lambda, z);
  const cplx i(0.0, 1.0);
  const double sp = std::sqrt(pi);
  const cplx Em = std::exp(-0.5 * z * z), Ep = std::exp(0.5 * z * z);
  const cplx rot = std::exp(-i * pi * g.ap);
  double worst = 0.0;
  for (double s : {1.0, -1.0}) {
    cplx lhs, rhs;
    double scale = 0.0;
    switch (which) {
      case WeberThetaIdentity::RecessiveReal: {
        const cplx t1 = w.w1 * g.Gb, t2 = -s * 2.0 * w.w2 * g.Ga;
        lhs = t1 + t2;
        rhs = Em * theta(g.a, s * z) / sp;
        scale = std::abs(t1) + std::abs(t2) + std::abs(rhs);
        break;
      }
      case WeberThetaIdentity::RecessiveImag: {
        const cplx t1 = w.w1 * g.Gbp, t2 = s * 2.0 * i * w.w2 * g.Gap;
        lhs = t1 + t2;
        rhs = Ep * theta(g.ap, -s * i * z) / sp;
        scale = std::abs(t1) + std::abs(t2) + std::abs(rhs);
        break;
      }
      case WeberThetaIdentity::FirstInTheta: {
        const cplx t1 = sp * rot * i * Em * g.Gap * theta(g.a, s * z);
        const cplx t2 = sp * rot * Ep * g.Ga * theta(g.ap, -s * i * z);
        lhs = w.w1;
        rhs = t1 + t2;
        scale = std::abs(lhs) + std::abs(t1) + std::abs(t2);
        break;
      }
      case WeberThetaIdentity::SecondInTheta: {
        const cplx t1 = -s * sp / 2.0 * rot * Em * g.Gbp * theta(g.a, s * z);
        const cplx t2 = s * sp / 2.0 * rot * Ep * g.Gb * theta(g.ap, -s * i * z);
        lhs = w.w2;
        rhs = t1 + t2;
        scale = std::abs(lhs) + std::abs(t1) + std::abs(t2);
        break;
      }
    }
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  return worst;
}

enum class WeberSector { RealAxis, Diagonal };

enum class WeberCaseId {
  Generic,             // both exponential branches present
  RecessivePlus,       // decaying branch along +z (real axis) / +iz bracket vanishes (diagonal)
  RecessiveMinus,      // mirror of RecessivePlus
  PolyEven,            // lambda = 1 + 4n (or -(1+4n) on the diagonal), Gaussian times z^{2n}
  PolyOdd,             // lambda = 3 + 4n (or -(3+4n) on the diagonal), Gaussian times z^{2n+1}
  DecayPlus,           // diagonal only: dominant bracket along +z vanishes
  DecayMinus,          // diagonal only: dominant bracket along -z vanishes
  PolyEvenDecaying,    // diagonal only: lambda = 1 + 4n with e^{-z^2/2}
  PolyOddDecaying,     // diagonal only: lambda = 3 + 4n with e^{-z^2/2}
};

/// Roman-numeral label of the case in its sector's case list.
inline std::string weber_case_label(WeberCaseId id) {
  switch (id) {
    case WeberCaseId::Generic: return "i";
    case WeberCaseId::RecessivePlus: return "ii";
    case WeberCaseId::RecessiveMinus: return "iii";
    case WeberCaseId::PolyEven: return "iv";
    case WeberCaseId::PolyOdd: return "v";
    case WeberCaseId::DecayPlus: return "vi";
    case WeberCaseId::DecayMinus: return "vii";
    case WeberCaseId::PolyEvenDecaying: return "viii";
    case WeberCaseId::PolyOddDecaying: return "ix";
  }
  return "?";
}

/// Argument the power is taken of, relative to z.
enum class WeberBase { Z, MinusZ, MinusIZ, IZ };

inline cplx weber_base_factor(WeberBase b) {
  switch (b) {
    case WeberBase::Z: return {1.0, 0.0};
    case WeberBase::MinusZ: return {-1.0, 0.0};
    case WeberBase::MinusIZ: return {0.0, -1.0};
    case WeberBase::IZ: return {0.0, 1.0};
  }
  return {1.0, 0.0};
}

struct WeberTerm {
  cplx prefactor;
  double exp_sign;  // coefficient of z^2 in the exponent, +-1/2
  WeberBase base;
  cplx power;
};

struct WeberCase {
  WeberCaseId case_id = WeberCaseId::Generic;
  WeberSector sector = WeberSector::RealAxis;
  int direction = 1;
  std::vector<WeberTerm> terms;
  std::optional<int> polynomial_degree;
  // Coefficients of z^{-2k}, k = 0..n, multiplying z^{degree} in the exact cases.
  std::vector<cplx> polynomial;

  std::string label() const { return weber_case_label(case_id); }

  cplx evaluate(cplx z) const {
    cplx total(0.0, 0.0);
    for (const auto& t : terms) {
      cplx v = t.prefactor * std::exp(t.exp_sign * z * z);
      if (polynomial_degree) {
        cplx s(0.0, 0.0);
        const cplx zm2 = 1.0 / (z * z);
        cplx zp(1.0, 0.0);
        for (const auto& c : polynomial) {
          s += c * zp;
          zp *= zm2;
        }
        v *= std::pow(z, *polynomial_degree) * s;
      } else {
        v *= cpow(weber_base_factor(t.base) * z, t.power);
      }
      total += v;
    }
    return total;
  }
};

struct WeberTolerances {
  double lattice = 1e-9;
  double bracket = 1e-10;
};

namespace detail {

// n >= 0 with |lambda - (offset + 4n)| <= tol, if any.
inline std::optional<int> lattice_index(cplx lambda, double offset, double tol) {
  const double n = std::round((lambda.real() - offset) / 4.0);
  if (n < 0) return std::nullopt;
  if (std::abs(lambda - cplx(offset + 4.0 * n, 0.0)) <= tol) return static_cast<int>(n);
  return std::nullopt;
}

inline std::vector<cplx> poly_coefficients(int n, double shift, double sign) {
  // sign^k (-n)_k (shift - n)_k / k!
  std::vector<cplx> c;
  double v = 1.0;
  for (int k = 0; k <= n; ++k) {
    c.emplace_back(v, 0.0);
    v *= sign * (-n + k) * (shift - n + k) / (k + 1.0);
  }
  return c;
}

}  // namespace detail

/// Leading asymptotic form of c1 w1 + c2 w2 in the given sector and direction.
inline WeberCase weber_combo_leading(cplx lambda, cplx c1, cplx c2, WeberSector sector,
                                     int direction, const WeberTolerances& tol = {}) {
  if (std::abs(c1) + std::abs(c2) == 0.0)
    throw domain_error("weber_combo_leading: c1 and c2 both vanish");
  const int d = direction >= 0 ? 1 : -1;
  const double sp = std::sqrt(pi);
  const cplx i(0.0, 1.0);
  const double cmag = std::abs(c1) + std::abs(c2);
  WeberCase out;
  out.sector = sector;
  out.direction = d;

  auto set_poly = [&](WeberCaseId id, cplx pref, double exp_sign, int degree,
                      std::vector<cplx> coeffs) {
    out.case_id = id;
    out.terms = {{pref, exp_sign, WeberBase::Z, cplx(degree, 0.0)}};
    out.polynomial_degree = degree;
    out.polynomial = std::move(coeffs);
    return out;
  };

  // Exact Gaussian-times-polynomial cases.
  const bool c1_zero = std::abs(c1) <= tol.bracket * cmag;
  const bool c2_zero = std::abs(c2) <= tol.bracket * cmag;
  const bool diag = sector == WeberSector::Diagonal;
  if (auto n = detail::lattice_index(lambda, 1.0, tol.lattice); n && c2_zero) {
    const cplx c = c1 / recip_gamma(0.5 - *n);
    return set_poly(diag ? WeberCaseId::PolyEvenDecaying : WeberCaseId::PolyEven, c / sp, -0.5,
                    2 * *n, detail::poly_coefficients(*n, 0.5, -1.0));
  }
  if (auto n = detail::lattice_index(lambda, 3.0, tol.lattice); n && c1_zero) {
    const cplx pref = -c2 / (2.0 * recip_gamma(-0.5 - *n) * sp);
    return set_poly(diag ? WeberCaseId::PolyOddDecaying : WeberCaseId::PolyOdd, pref, -0.5,
                    2 * *n + 1, detail::poly_coefficients(*n, -0.5, -1.0));
  }
  if (diag) {
    if (auto n = detail::lattice_index(-lambda, 1.0, tol.lattice); n && c2_zero) {
      const cplx c = c1 / recip_gamma(0.5 - *n);
      const double sgn = *n % 2 == 0 ? 1.0 : -1.0;
      return set_poly(WeberCaseId::PolyEven, sgn * c / sp, 0.5, 2 * *n,
                      detail::poly_coefficients(*n, 0.5, 1.0));
    }
    if (auto n = detail::lattice_index(-lambda, 3.0, tol.lattice); n && c1_zero) {
      const double sgn = *n % 2 == 0 ? 1.0 : -1.0;
      const cplx pref = sgn * (-c2 / (2.0 * recip_gamma(-0.5 - *n) * sp));
      return set_poly(WeberCaseId::PolyOdd, pref, 0.5, 2 * *n + 1,
                      detail::poly_coefficients(*n, -0.5, 1.0));
    }
  }

  const WeberWeights g(lambda);
  const cplx grow_power = -(1.0 + lambda) / 2.0;
  const cplx decay_power = -(1.0 - lambda) / 2.0;

  struct Bracket {
    const char* name;
    cplx value;
    double scale;
    WeberCaseId id;
  };
  const double wscale = g.bracket_scale(c1, c2);
  auto K = [&](double s) { return std::pair{c1 * g.Ga + s * c2 * g.Gb / 2.0, wscale}; };
  auto L = [&](double s) { return std::pair{i * c1 * g.Gap - s * c2 * g.Gbp / 2.0, wscale}; };

  std::vector<Bracket> brackets;
  if (!diag) {
    auto [kp, skp] = K(1.0);
    auto [km, skm] = K(-1.0);
    brackets = {{"K+", kp, skp, WeberCaseId::RecessivePlus},
                {"K-", km, skm, WeberCaseId::RecessiveMinus}};
  } else {
    auto [lp, slp] = L(1.0);
    auto [lm, slm] = L(-1.0);
    auto [kp, skp] = K(1.0);
    auto [km, skm] = K(-1.0);
    brackets = {{"L+", lp, slp, WeberCaseId::RecessivePlus},
                {"L-", lm, slm, WeberCaseId::RecessiveMinus},
                {"K+", kp, skp, WeberCaseId::DecayPlus},
                {"K-", km, skm, WeberCaseId::DecayMinus}};
  }

  std::vector<std::string> vanishing, borderline;
  std::vector<bool> zero(brackets.size(), false);
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const double ratio = brackets[k].scale == 0.0 ? 0.0 : std::abs(brackets[k].value) / brackets[k].scale;
    if (ratio <= tol.bracket) {
      zero[k] = true;
      vanishing.push_back(weber_case_label(brackets[k].id));
    } else if (ratio <= 10.0 * tol.bracket) {
      borderline.push_back(weber_case_label(brackets[k].id));
    }
  }
  if (vanishing.size() > 1 || !borderline.empty()) {
    std::vector<std::string> cands = vanishing;
    cands.insert(cands.end(), borderline.begin(), borderline.end());
    if (vanishing.empty() || !borderline.empty()) cands.push_back("i");
    throw ambiguity_error("weber_combo_leading: case match is ambiguous at tolerance", cands);
  }
  out.case_id = WeberCaseId::Generic;
  for (std::size_t k = 0; k < brackets.size(); ++k)
    if (zero[k]) out.case_id = brackets[k].id;

  if (!diag) {
    const std::size_t idx = d > 0 ? 0 : 1;
    const WeberBase base = d > 0 ? WeberBase::Z : WeberBase::MinusZ;
    if (!zero[idx]) {
      out.terms = {{sp * brackets[idx].value, 0.5, base, grow_power}};
    } else {
      // c1 = c G(b), c2 = -+2c G(a)
      const cplx c = std::abs(g.Gb) >= std::abs(g.Ga) ? c1 / g.Gb : -static_cast<double>(d) * c2 / (2.0 * g.Ga);
      out.terms = {{c / sp, -0.5, base, decay_power}};
    }
    return out;
  }
  const cplx rot = std::exp(-i * pi * g.ap);
  const std::size_t li = d > 0 ? 0 : 1, ki = d > 0 ? 2 : 3;
  if (!zero[li])
    out.terms.push_back({sp * rot * brackets[li].value, -0.5, d > 0 ? WeberBase::Z : WeberBase::MinusZ, decay_power});
  if (!zero[ki])
    out.terms.push_back({sp * rot * brackets[ki].value, 0.5, d > 0 ? WeberBase::MinusIZ : WeberBase::IZ, grow_power});
  return out;
}

/// c1 w1(z) + c2 w2(z) times e^{log_scale}, through the Theta representation.
/// Brackets below the matching tolerance are treated as exactly zero.
inline cplx weber_combo_eval(cplx lambda, cplx c1, cplx c2, cplx z, cplx log_scale = 0.0,
                             double bracket_tol = 1e-10) {
  const WeberWeights g(lambda);
  const cplx i(0.0, 1.0);
  const double s = z.real() >= 0.0 ? 1.0 : -1.0;
  cplx L = i * c1 * g.Gap - s * c2 * g.Gbp / 2.0;
  cplx K = c1 * g.Ga + s * c2 * g.Gb / 2.0;
  const double scale = g.bracket_scale(c1, c2);
  if (std::abs(L) <= bracket_tol * scale) L = 0.0;
  if (std::abs(K) <= bracket_tol * scale) K = 0.0;
  const cplx pre = std::sqrt(pi) * std::exp(-i * pi * g.ap);
  cplx total(0.0, 0.0);
  if (L != cplx(0.0, 0.0)) total += L * theta(g.a, s * z) * std::exp(log_scale - 0.5 * z * z);
  if (K != cplx(0.0, 0.0)) total += K * theta(g.ap, -s * i * z) * std::exp(log_scale + 0.5 * z * z);
  return pre * total;
}

}  // namespace twreg
