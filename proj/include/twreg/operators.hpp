#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/specfun.hpp"
#include "twreg/weber.hpp"

namespace twreg {

struct TwistedFrame {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;

  void validate() const {
    if (std::abs(alpha * delta - beta * gamma - 1.0) > 1e-12)
      throw frame_error("frame: alpha*delta - beta*gamma must equal 1");
    if (std::abs(beta * delta) <= 1e-12) throw frame_error("frame: beta*delta must be nonzero");
  }
};

/// Coefficients a_kj of sum a_kj M^j D^k; first index is the power of D.
struct CoeffTable {
  cplx a20{}, a11{}, a02{}, a10{}, a01{}, a00{};

  double top_order_mass() const { return std::abs(a20) + std::abs(a11) + std::abs(a02); }
  CoeffTable scaled(cplx c) const { return {c * a20, c * a11, c * a02, c * a10, c * a01, c * a00}; }
};

struct TwistedOperator {
  CoeffTable coeffs;
  TwistedFrame frame;
};

struct WeylSymbol {
  cplx b20{}, b11{}, b02{}, b10{}, b01{}, b00{};
  cplx full_const{};  // b00 + (i/2) b11
  double theta = 0.0;

  double norm() const {
    return std::max({std::abs(b20), std::abs(b11), std::abs(b02), std::abs(b10), std::abs(b01),
                     std::abs(b00)});
  }

  cplx operator()(cplx x, cplx xi) const {
    return b20 * xi * xi + (b11 * x + b10) * xi + b02 * x * x + b01 * x + full_const;
  }

  WeylSymbol conj() const {
    WeylSymbol r{std::conj(b20), std::conj(b11), std::conj(b02), std::conj(b10),
                 std::conj(b01), std::conj(b00), {}, theta};
    r.full_const = r.b00 + cplx(0.0, 0.5) * r.b11;
    return r;
  }
};

/// Source of a twisted operator: the same table read as an ordinary operator in (M, D).
inline CoeffTable source_of(const TwistedOperator& A) {
  A.frame.validate();
  return A.coeffs;
}

inline WeylSymbol weyl_symbol(const CoeffTable& s) {
  WeylSymbol b{s.a20, s.a11, s.a02, s.a10, s.a01, s.a00, {}, 0.0};
  b.full_const = s.a00 + cplx(0.0, 0.5) * s.a11;
  return b;
}

/// Composes the full symbol with (x, xi) -> (x + theta xi, xi).
inline WeylSymbol symplectic_shift(const WeylSymbol& b, double theta) {
  WeylSymbol r;
  r.b20 = b.b20 + theta * b.b11 + theta * theta * b.b02;
  r.b11 = b.b11 + 2.0 * theta * b.b02;
  r.b02 = b.b02;
  r.b10 = b.b10 + theta * b.b01;
  r.b01 = b.b01;
  r.full_const = b.full_const;
  r.b00 = r.full_const - cplx(0.0, 0.5) * r.b11;
  r.theta = b.theta + theta;
  return r;
}

struct OperatorTolerances {
  double zero = 1e-12;
};

inline bool top_coefficient_vanishes(const WeylSymbol& b, double tol) {
  const double scale = std::max({std::abs(b.b20), std::abs(b.b11), std::abs(b.b02)});
  return std::abs(b.b20) <= tol * scale;
}

inline double choose_theta(const WeylSymbol& b, const OperatorTolerances& tol = {}) {
  const double scale = std::max({std::abs(b.b20), std::abs(b.b11), std::abs(b.b02)});
  if (scale == 0.0) throw order_error("choose_theta: second-order part vanishes");
  for (double t : {0.0, 1.0, 2.0}) {
    if (std::abs(b.b20 + t * b.b11 + t * t * b.b02) > tol.zero * scale) return t;
  }
  throw order_error("choose_theta: no admissible shift in {0,1,2}");
}

enum class DeltaCase { D2Nonzero, D1Nonzero, AllZeroQuad };

inline const char* to_string(DeltaCase c) {
  switch (c) {
    case DeltaCase::D2Nonzero: return "D2nonzero";
    case DeltaCase::D1Nonzero: return "D1nonzero";
    case DeltaCase::AllZeroQuad: return "AllZeroQuad";
  }
  return "?";
}

struct Discriminants {
  cplx d2, d1, d0;
  std::optional<cplx> lambda;
  DeltaCase kind = DeltaCase::D2Nonzero;
  bool d0_zero = false;
  std::vector<std::string> warnings;
};

namespace detail {

// num / b20^2, with rounding-level imaginary parts dropped so real ratios stay on the axis.
inline cplx ratio(cplx num, cplx b20sq) {
  const cplx w = num / b20sq;
  if (std::abs(w.imag()) <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(w.real()))
    return {w.real(), 0.0};
  return w;
}

inline void require_b20(const WeylSymbol& b) {
  if (b.b20 == cplx(0.0, 0.0) || top_coefficient_vanishes(b, 1e-14))
    throw shift_required_error("b20 vanishes; apply a symplectic shift first");
}

inline void note_borderline(std::vector<std::string>& w, const char* what, double value,
                            double threshold) {
  if (value > threshold && value <= 10.0 * threshold)
    w.push_back(std::string(what) + " is within 10x of the zero tolerance");
}

}  // namespace detail

inline Discriminants discriminants(const WeylSymbol& b, const OperatorTolerances& tol = {}) {
  detail::require_b20(b);
  const cplx i(0.0, 1.0);
  Discriminants d;
  d.d2 = b.b11 * b.b11 - 4.0 * b.b20 * b.b02;
  d.d1 = 2.0 * b.b11 * b.b10 - 4.0 * b.b20 * b.b01;
  d.d0 = b.b10 * b.b10 - 4.0 * b.b20 * b.b00 - 2.0 * i * b.b20 * b.b11;
  const double nb = b.norm();
  const double thr = tol.zero * std::max(1.0, nb * nb);
  detail::note_borderline(d.warnings, "Delta2", std::abs(d.d2), thr);
  if (std::abs(d.d2) > thr) {
    d.kind = DeltaCase::D2Nonzero;
    const cplx b20sq = b.b20 * b.b20;
    d.lambda = 0.125 * cpow(-detail::ratio(d.d2, b20sq), -1.5) * (d.d1 * d.d1 - 4.0 * d.d2 * d.d0) / (b20sq * b20sq);
  } else {
    detail::note_borderline(d.warnings, "Delta1", std::abs(d.d1), thr);
    d.kind = std::abs(d.d1) > thr ? DeltaCase::D1Nonzero : DeltaCase::AllZeroQuad;
  }
  d.d0_zero = std::abs(d.d0) <= thr;
  return d;
}

namespace detail {

// sigma(w) w^{1/2}
inline cplx signed_root(cplx w) {
  if (w == cplx(0.0, 0.0)) return {0.0, 0.0};
  return static_cast<double>(sigma(w)) * cpow(w, 0.5);
}

}  // namespace detail

/// Branch-resolved roots of the Weyl symbol at x; first is the + root.
inline std::pair<cplx, cplx> xi_pm(const WeylSymbol& b, double x, const OperatorTolerances& tol = {}) {
  const auto d = discriminants(b, tol);
  const cplx b20sq = b.b20 * b.b20;
  const cplx lin = b.b11 / b.b20 * x + b.b10 / b.b20;
  cplx r;
  switch (d.kind) {
    case DeltaCase::D2Nonzero: {
      if (x == 0.0) {
        r = detail::signed_root(detail::ratio(d.d2, b20sq)) * cpow(d.d0 / d.d2, 0.5);
        if (d.d0 == cplx(0.0, 0.0)) r = 0.0;
        break;
      }
      r = detail::signed_root(detail::ratio(d.d2, b20sq)) * x *
          cpow(1.0 + d.d1 / (d.d2 * x) + d.d0 / (d.d2 * x * x), 0.5);
      break;
    }
    case DeltaCase::D1Nonzero:
      if (x == 0.0) throw domain_error("xi_pm: x = 0 in the fractional-power case");
      r = detail::signed_root(detail::ratio(d.d1, b20sq)) * cpow(cplx(x, 0.0), 0.5) *
          cpow(1.0 + d.d0 / (d.d1 * x), 0.5);
      break;
    case DeltaCase::AllZeroQuad:
      r = detail::signed_root(detail::ratio(d.d0, b20sq));
      break;
  }
  return {-0.5 * (lin + r), -0.5 * (lin - r)};
}

/// Phases Sigma_+(x), Sigma_-(x).
inline std::pair<cplx, cplx> sigma_pm(const WeylSymbol& b, double x, const OperatorTolerances& tol = {}) {
  const auto d = discriminants(b, tol);
  const cplx b20sq = b.b20 * b.b20;
  const cplx base = b.b11 / b.b20 * x * x + 2.0 * b.b10 / b.b20 * x;
  cplx r;
  switch (d.kind) {
    case DeltaCase::D2Nonzero: {
      const cplx t = x + d.d1 / (2.0 * d.d2);
      r = detail::signed_root(detail::ratio(d.d2, b20sq)) * t * t;
      break;
    }
    case DeltaCase::D1Nonzero:
      if (x == 0.0) throw domain_error("sigma_pm: x = 0 in the fractional-power case");
      r = 4.0 / 3.0 * detail::signed_root(detail::ratio(d.d1, b20sq)) * cpow(cplx(x, 0.0), 1.5) *
          cpow(1.0 + d.d0 / (d.d1 * x), 1.5);
      break;
    case DeltaCase::AllZeroQuad:
      r = 2.0 * detail::signed_root(detail::ratio(d.d0, b20sq)) * x;
      break;
  }
  return {-0.25 * (base + r), -0.25 * (base - r)};
}

struct SolutionValue {
  cplx u, du, d2u;
};

/// Two analytic solutions of B u = 0 for the symbol's Delta case.
class SolutionBasis {
 public:
  explicit SolutionBasis(const WeylSymbol& b, const OperatorTolerances& tol = {})
      : b_(b), disc_(twreg::discriminants(b, tol)) {
    const cplx b20sq = b.b20 * b.b20;
    switch (disc_.kind) {
      case DeltaCase::D2Nonzero:
        lambda_ = *disc_.lambda;
        kappa_ = cpow(-detail::ratio(disc_.d2, b20sq) / 4.0, 0.25);
        shift_ = disc_.d1 / (2.0 * disc_.d2);
        break;
      case DeltaCase::D1Nonzero:
        kappa_ = cpow(-detail::ratio(disc_.d1, b20sq) / 4.0, 1.0 / 3.0);
        shift_ = disc_.d0 / disc_.d1;
        break;
      case DeltaCase::AllZeroQuad:
        rate_ = cplx(0.0, 0.5) * detail::signed_root(detail::ratio(disc_.d0, b20sq));
        break;
    }
  }

  DeltaCase kind() const { return disc_.kind; }
  const WeylSymbol& symbol() const { return b_; }
  const Discriminants& discriminants() const { return disc_; }
  cplx lambda() const { return lambda_; }
  /// Scale factor of the reduced variable: (-D2/4b20^2)^{1/4} or (-D1/4b20^2)^{1/3}.
  cplx kappa() const { return kappa_; }
  /// Shift of the reduced variable: D1/(2 D2) or D0/D1.
  cplx shift() const { return shift_; }
  /// Exponential rate r in the case D2 = D1 = 0: u1 = e^{-h + r x}, u2 = e^{-h - r x}.
  cplx rate() const { return rate_; }
  bool linear() const { return disc_.kind == DeltaCase::AllZeroQuad && disc_.d0_zero; }

  /// Gauge exponent h(x) = (i / 4 b20)(b11 x^2 + 2 b10 x) and its derivatives.
  cplx h(double x) const { return cplx(0.0, 0.25) / b_.b20 * (b_.b11 * x * x + 2.0 * b_.b10 * x); }
  cplx dh(double x) const { return cplx(0.0, 0.5) / b_.b20 * (b_.b11 * x + b_.b10); }
  cplx d2h() const { return cplx(0.0, 0.5) / b_.b20 * b_.b11; }

  /// Reduced variable z(x) for the Weber and Airy cases.
  cplx z(double x) const { return kappa_ * (x + shift_); }

  /// u_j and derivatives, j in {1, 2}.
  SolutionValue basis(int j, double x) const {
    const cplx e = std::exp(-h(x));
    const cplx hp = dh(x), hpp = d2h();
    cplx v, dv, d2v;
    switch (disc_.kind) {
      case DeltaCase::D2Nonzero: {
        const auto w = weber_w(lambda_, z(x));
        v = j == 1 ? w.w1 : w.w2;
        dv = kappa_ * (j == 1 ? w.dw1 : w.dw2);
        d2v = kappa_ * kappa_ * (j == 1 ? w.d2w1 : w.d2w2);
        break;
      }
      case DeltaCase::D1Nonzero: {
        const auto p = j == 1 ? airy_ai_pair(z(x)) : airy_bi_pair(z(x));
        v = p.value;
        dv = kappa_ * p.deriv;
        d2v = kappa_ * kappa_ * z(x) * p.value;
        break;
      }
      case DeltaCase::AllZeroQuad: {
        if (linear()) {
          v = j == 1 ? cplx(1.0) : cplx(x);
          dv = j == 1 ? cplx(0.0) : cplx(1.0);
          d2v = 0.0;
        } else {
          const cplx r = j == 1 ? rate_ : -rate_;
          v = std::exp(r * x);
          dv = r * v;
          d2v = r * r * v;
        }
        break;
      }
    }
    return {e * v, e * (dv - hp * v), e * (d2v - 2.0 * hp * dv + (hp * hp - hpp) * v)};
  }

 private:
  WeylSymbol b_;
  Discriminants disc_;
  cplx lambda_{}, kappa_{}, shift_{}, rate_{};
};

inline SolutionBasis solution_basis(const WeylSymbol& b, const OperatorTolerances& tol = {}) {
  return SolutionBasis(b, tol);
}

inline SolutionValue eval_solution_full(const SolutionBasis& basis, cplx c1, cplx c2, double x) {
  SolutionValue r{0.0, 0.0, 0.0};
  if (c1 != cplx(0.0, 0.0)) {
    const auto s = basis.basis(1, x);
    r.u += c1 * s.u;
    r.du += c1 * s.du;
    r.d2u += c1 * s.d2u;
  }
  if (c2 != cplx(0.0, 0.0)) {
    const auto s = basis.basis(2, x);
    r.u += c2 * s.u;
    r.du += c2 * s.du;
    r.d2u += c2 * s.d2u;
  }
  return r;
}

inline cplx eval_solution(const SolutionBasis& basis, cplx c1, cplx c2, double x) {
  return eval_solution_full(basis, c1, c2, x).u;
}

/// B u with D = -i d/dx.
inline cplx apply_operator(const WeylSymbol& b, double x, cplx u, cplx du, cplx d2u) {
  const cplx i(0.0, 1.0);
  return -b.b20 * d2u - i * (b.b11 * x + b.b10) * du + (b.b02 * x * x + b.b01 * x + b.b00) * u;
}

/// Explicit solution of B u = f when D2 = D1 = D0 = 0, sampled on the grid.
inline std::vector<cplx> explicit_solve_degenerate(const WeylSymbol& b,
                                                   const std::function<cplx(double)>& f, cplx c0,
                                                   cplx c1, const std::vector<double>& grid,
                                                   const OperatorTolerances& tol = {}) {
  const auto d = discriminants(b, tol);
  if (d.kind != DeltaCase::AllZeroQuad || !d.d0_zero)
    throw case_error("explicit_solve_degenerate: requires D2 = D1 = D0 = 0");
  auto h = [&](double x) { return cplx(0.0, 0.25) / b.b20 * (b.b11 * x * x + 2.0 * b.b10 * x); };
  std::vector<cplx> out;
  out.reserve(grid.size());
  for (double x : grid) {
    cplx integral(0.0, 0.0);
    if (x != 0.0) {
      auto g = [&](double t) { return (x - t) * std::exp(h(t)) * f(t); };
      integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, 0.0, x, 15, 1e-13);
    }
    out.push_back(-std::exp(-h(x)) * (integral / b.b20 + c0 * x + c1));
  }
  return out;
}

/// Full symbol of the twisted operator at (x, y, xi, eta).
inline cplx twisted_symbol(const TwistedOperator& A, double x, double y, double xi, double eta) {
  A.frame.validate();
  const auto& f = A.frame;
  const double P = f.alpha * eta - f.beta * x;
  const double Q = f.gamma * xi - f.delta * y;
  const cplx iad(0.0, f.alpha * f.delta);
  // (k, j, a_kj): k is the power of the D-type field, j of the M-type field.
  const std::array<std::tuple<int, int, cplx>, 6> terms{{{2, 0, A.coeffs.a20},
                                                         {1, 1, A.coeffs.a11},
                                                         {0, 2, A.coeffs.a02},
                                                         {1, 0, A.coeffs.a10},
                                                         {0, 1, A.coeffs.a01},
                                                         {0, 0, A.coeffs.a00}}};
  auto binom = [](int n, int k) { return k == 0 || k == n ? 1.0 : static_cast<double>(n); };
  cplx total(0.0, 0.0);
  for (const auto& [k, j, a] : terms) {
    cplx inner(0.0, 0.0);
    cplx iadn(1.0, 0.0);
    double nfact = 1.0;
    for (int n = 0; n <= std::min(j, k); ++n) {
      if (n > 0) {
        iadn *= iad;
        nfact *= n;
      }
      inner += iadn * binom(j, n) * binom(k, n) * nfact * std::pow(P, j - n) * std::pow(Q, k - n);
    }
    total += ((j + k) % 2 == 0 ? 1.0 : -1.0) * a * inner;
  }
  return total;
}

}  // namespace twreg
