#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/operators.hpp"
#include "twreg/specfun.hpp"
#include "twreg/verify/report.hpp"
#include "twreg/weber.hpp"

namespace twreg::verify {

struct AsymOptions {
  // Use the printed minus sign in front of (c1 + i c2) on the right half-line of the Airy case.
  bool printed_airy_sign = false;
  // |Arg(D2/b20^2)| below this (but nonzero) counts as near the diagonal boundary.
  double near_diagonal_arg = 0.2;
};

struct AsymSample {
  double x = 0.0;
  cplx actual, predicted;
  double deviation = 0.0;  // |actual - predicted| / sum of |leading terms|
  std::string form;        // which leading form was used
  bool near_boundary = false;
};

namespace detail {

inline bool diagonal_sector(const Discriminants& d, const WeylSymbol& b) {
  const cplx w = d.d2 / (b.b20 * b.b20);
  return std::abs(arg_principal(w)) <= 1e-12;
}

inline AsymSample weber_sample(const SolutionBasis& basis, cplx c1, cplx c2, double x, const AsymOptions& opt) {
  const auto& b = basis.symbol();
  const auto& d = basis.discriminants();
  const bool diag = diagonal_sector(d, b);
  const int dir = x > 0 ? 1 : -1;
  const auto wc = weber_combo_leading(basis.lambda(), c1, c2,
                                      diag ? WeberSector::Diagonal : WeberSector::RealAxis, dir);
  const cplx z = basis.z(x);
  const cplx mh = -basis.h(x);
  AsymSample s;
  s.x = x;
  s.form = std::string(diag ? "diagonal/" : "real-axis/") + wc.label();
  const double argw = std::abs(arg_principal(d.d2 / (b.b20 * b.b20)));
  s.near_boundary = !diag && argw < opt.near_diagonal_arg;
  s.actual = weber_combo_eval(basis.lambda(), c1, c2, z, mh);
  double scale = 0.0;
  for (const auto& t : wc.terms) {
    cplx v = t.prefactor * std::exp(mh + t.exp_sign * z * z);
    if (wc.polynomial_degree) {
      cplx sum(0.0, 0.0), zp(1.0, 0.0);
      for (const auto& c : wc.polynomial) {
        sum += c * zp;
        zp /= z * z;
      }
      v *= std::pow(z, *wc.polynomial_degree) * sum;
    } else {
      v *= cpow(weber_base_factor(t.base) * basis.kappa() * static_cast<double>(dir), t.power) *
           std::pow(std::abs(x), t.power.real()) * std::exp(cplx(0.0, t.power.imag() * std::log(std::abs(x))));
    }
    s.predicted += v;
    scale += std::abs(v);
  }
  s.deviation = std::abs(s.actual - s.predicted) / scale;
  return s;
}

inline AsymSample airy_sample(const SolutionBasis& basis, cplx c1, cplx c2, double x, const AsymOptions& opt) {
  const auto& b = basis.symbol();
  const auto& d = basis.discriminants();
  const cplx i(0.0, 1.0);
  const cplx z = basis.z(x);
  AsymSample s;
  s.x = x;
  s.actual = std::exp(-basis.h(x)) * (c1 * airy_ai(z) + c2 * airy_bi(z));
  const auto [sp, sm] = sigma_pm(b, x);
  const cplx pre = cpow(-d.d1 / (4.0 * b.b20 * b.b20), -1.0 / 12.0) * std::pow(std::abs(x), -0.25);
  cplx t1, t2;
  if (x > 0) {
    s.form = "airy/right";
    const double sgn = opt.printed_airy_sign ? -1.0 : 1.0;
    t1 = pre / (2.0 * std::sqrt(pi)) * 2.0 * c2 * std::exp(i * sm);
    t2 = pre / (2.0 * std::sqrt(pi)) * sgn * (c1 + i * c2) * std::exp(i * sp);
  } else {
    s.form = "airy/left";
    const double k = 1.0 / (2.0 * std::sqrt(2.0 * pi));
    t1 = pre * k * ((1.0 - i) * c1 + (1.0 + i) * c2) * std::exp(i * sp);
    t2 = pre * k * ((1.0 + i) * c1 + (1.0 - i) * c2) * std::exp(i * sm);
  }
  s.predicted = t1 + t2;
  s.deviation = std::abs(s.actual - s.predicted) / (std::abs(t1) + std::abs(t2));
  return s;
}

inline AsymSample elementary_sample(const SolutionBasis& basis, cplx c1, cplx c2, double x) {
  const cplx i(0.0, 1.0);
  AsymSample s;
  s.x = x;
  s.actual = eval_solution(basis, c1, c2, x);
  const auto [sp, sm] = sigma_pm(basis.symbol(), x);
  cplx t1, t2;
  if (basis.linear()) {
    s.form = "elementary/linear";
    t1 = c1 * std::exp(i * sp);
    t2 = c2 * x * std::exp(i * sp);
  } else {
    s.form = "elementary/exponential";
    t1 = c1 * std::exp(i * sm);
    t2 = c2 * std::exp(i * sp);
  }
  s.predicted = t1 + t2;
  const double scale = std::abs(t1) + std::abs(t2);
  s.deviation = scale == 0.0 ? std::abs(s.actual) : std::abs(s.actual - s.predicted) / scale;
  return s;
}

}  // namespace detail

/// Compares c1 u1 + c2 u2 at x with the predicted leading form for the symbol's case.
inline AsymSample solution_asym_sample(const WeylSymbol& b, cplx c1, cplx c2, double x,
                                       const AsymOptions& opt = {}) {
  if (x == 0.0) throw domain_error("solution_asym_sample: x must be nonzero");
  const SolutionBasis basis(b);
  switch (basis.kind()) {
    case DeltaCase::D2Nonzero: return detail::weber_sample(basis, c1, c2, x, opt);
    case DeltaCase::D1Nonzero: return detail::airy_sample(basis, c1, c2, x, opt);
    case DeltaCase::AllZeroQuad: return detail::elementary_sample(basis, c1, c2, x);
  }
  throw case_error("solution_asym_sample: unknown case");
}

/// Ratio test at x = +R and x = -R: 25% at R = 8, 13% at R = 16, doubled near the diagonal boundary.
inline CheckReport solution_asym_check(const WeylSymbol& b, cplx c1, cplx c2, double R,
                                       const AsymOptions& opt = {}) {
  const double base_tol = R >= 16.0 ? 0.13 : 0.25;
  double worst = 0.0;
  bool relaxed = false;
  std::string forms;
  for (double x : {R, -R}) {
    const auto s = solution_asym_sample(b, c1, c2, x, opt);
    relaxed = relaxed || s.near_boundary;
    worst = std::max(worst, s.deviation);
    forms += (forms.empty() ? "" : ",") + s.form;
  }
  CheckReport r("solution_asym_R" + std::to_string(static_cast<int>(R)), worst, relaxed ? 2.0 * base_tol : base_tol);
  r.with("forms", forms);
  if (relaxed) r.with("warning", "near Arg(D2/b20^2) = 0; tolerance doubled");
  return r;
}

}  // namespace twreg::verify
