#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twreg/branchcut.hpp"
#include "twreg/errors.hpp"
#include "twreg/operators.hpp"

namespace twreg {

enum class Root { Plus, Minus };
enum class End { PlusInf, MinusInf };

/// Leading terms of x Xi(x) at one end, as coefficients of |x|^exponent.
struct GrowthSignature {
  End end = End::PlusInf;
  std::vector<std::pair<double, cplx>> terms;  // strictly decreasing exponents
};

inline GrowthSignature growth_signature(const WeylSymbol& b, Root root, End end,
                                        const OperatorTolerances& tol = {}) {
  const auto d = discriminants(b, tol);
  const double s = root == Root::Plus ? 1.0 : -1.0;
  const bool left = end == End::MinusInf;
  const cplx b20sq = b.b20 * b.b20;
  const cplx i(0.0, 1.0);
  GrowthSignature g;
  g.end = end;
  // Coefficients of x^2 and x are real-line values; x at the left end is -|x|.
  const double lin_sign = left ? -1.0 : 1.0;
  switch (d.kind) {
    case DeltaCase::D2Nonzero: {
      const cplx r = detail::signed_root(detail::ratio(d.d2, b20sq));
      g.terms.push_back({2.0, -0.5 * (b.b11 / b.b20 + s * r)});
      g.terms.push_back({1.0, lin_sign * -0.5 * (b.b10 / b.b20 + s * 0.5 * r * d.d1 / d.d2)});
      break;
    }
    case DeltaCase::D1Nonzero: {
      const cplx r = detail::signed_root(detail::ratio(d.d1, b20sq));
      // x^{3/2} = -i |x|^{3/2} and x^{1/2} = i |x|^{1/2} for x < 0.
      const cplx c32 = left ? -i : cplx(1.0);
      const cplx c12 = left ? i : cplx(1.0);
      g.terms.push_back({2.0, -0.5 * b.b11 / b.b20});
      g.terms.push_back({1.5, c32 * (-s * 0.5 * r)});
      g.terms.push_back({1.0, lin_sign * -0.5 * b.b10 / b.b20});
      g.terms.push_back({0.5, c12 * (-s * 0.25 * r * d.d0 / d.d1)});
      break;
    }
    case DeltaCase::AllZeroQuad: {
      const cplx r = detail::signed_root(detail::ratio(d.d0, b20sq));
      g.terms.push_back({2.0, -0.5 * b.b11 / b.b20});
      g.terms.push_back({1.0, lin_sign * -0.5 * (b.b10 / b.b20 + s * r)});
      break;
    }
  }
  return g;
}

enum class EndBehavior { PlusInf, MinusInf, Bounded };

inline const char* to_string(EndBehavior e) {
  switch (e) {
    case EndBehavior::PlusInf: return "PlusInf";
    case EndBehavior::MinusInf: return "MinusInf";
    case EndBehavior::Bounded: return "Bounded";
  }
  return "?";
}

struct EndBehaviorResult {
  EndBehavior behavior = EndBehavior::Bounded;
  bool borderline = false;  // some imaginary part within 10x of the threshold
};

inline EndBehaviorResult end_behavior_detail(const GrowthSignature& sig, double tol) {
  double scale = 0.0;
  for (const auto& t : sig.terms) scale = std::max(scale, std::abs(t.second));
  EndBehaviorResult r;
  if (scale == 0.0) return r;
  const double thr = tol * scale;
  for (const auto& t : sig.terms) {
    const double im = t.second.imag();
    if (std::abs(im) > thr) {
      if (std::abs(im) <= 10.0 * thr) r.borderline = true;
      r.behavior = im > 0.0 ? EndBehavior::PlusInf : EndBehavior::MinusInf;
      return r;
    }
    if (im != 0.0) r.borderline = true;
  }
  return r;
}

inline EndBehavior end_behavior(const GrowthSignature& sig, double tol) {
  return end_behavior_detail(sig, tol).behavior;
}

enum class SchwartzClass { InS, InSprimeNotS, NotInSprime };

inline const char* to_string(SchwartzClass c) {
  switch (c) {
    case SchwartzClass::InS: return "InS";
    case SchwartzClass::InSprimeNotS: return "InSprimeNotS";
    case SchwartzClass::NotInSprime: return "NotInSprime";
  }
  return "?";
}

struct ClassifyTolerances {
  double zero = 1e-12;
  double lambda = 1e-9;
};

struct RootReport {
  Root root = Root::Plus;
  SchwartzClass cls = SchwartzClass::InSprimeNotS;
  EndBehavior at_plus = EndBehavior::Bounded, at_minus = EndBehavior::Bounded;
  bool borderline = false;
};

inline RootReport root_report(const WeylSymbol& b, Root root, const ClassifyTolerances& tol = {}) {
  const OperatorTolerances otol{tol.zero};
  const auto p = end_behavior_detail(growth_signature(b, root, End::PlusInf, otol), tol.zero);
  const auto m = end_behavior_detail(growth_signature(b, root, End::MinusInf, otol), tol.zero);
  RootReport r;
  r.root = root;
  r.at_plus = p.behavior;
  r.at_minus = m.behavior;
  r.borderline = p.borderline || m.borderline;
  if (p.behavior == EndBehavior::PlusInf && m.behavior == EndBehavior::PlusInf)
    r.cls = SchwartzClass::InS;
  else if (p.behavior == EndBehavior::MinusInf || m.behavior == EndBehavior::MinusInf)
    r.cls = SchwartzClass::NotInSprime;
  else
    r.cls = SchwartzClass::InSprimeNotS;
  return r;
}

inline SchwartzClass schwartz_class(const WeylSymbol& b, Root root, const ClassifyTolerances& tol = {}) {
  return root_report(b, root, tol).cls;
}

inline bool lambda_is_odd_positive(cplx lambda, double tol) {
  if (std::abs(lambda.imag()) > tol) return false;
  const double re = lambda.real();
  if (re < 1.0 - tol) return false;
  const double n = std::round((re - 1.0) / 2.0);
  return std::abs(re - (1.0 + 2.0 * std::max(n, 0.0))) <= tol;
}

/// Which injectivity condition holds; the numeric values are the report codes.
enum class Condition {
  none = 0,
  both_roots_unbounded = 832,  // neither e^{ix Xi+} nor e^{ix Xi-} is temperate
  weber_split = 833,           // Xi- not temperate, Xi+ in S, D2 != 0, lambda off the odd lattice
  degenerate_split = 834,      // Xi- not temperate, Xi+ in S, D2 = 0
};

inline int condition_code(Condition c) { return static_cast<int>(c); }

struct SourceVerdict {
  Discriminants disc;
  RootReport plus, minus;
  bool lambda_odd_positive = false;
  Condition matched = Condition::none;
  bool regular = false;
  std::optional<bool> injective;
  bool anomaly = false;
  std::vector<std::string> warnings;
};

inline SourceVerdict classify_source(const WeylSymbol& b, const ClassifyTolerances& tol = {}) {
  SourceVerdict v;
  v.disc = discriminants(b, OperatorTolerances{tol.zero});
  v.warnings = v.disc.warnings;
  v.plus = root_report(b, Root::Plus, tol);
  v.minus = root_report(b, Root::Minus, tol);
  if (v.plus.borderline || v.minus.borderline)
    v.warnings.push_back("growth coefficient within 10x of the zero tolerance");
  if (v.disc.lambda) {
    v.lambda_odd_positive = lambda_is_odd_positive(*v.disc.lambda, tol.lambda);
    if (!v.lambda_odd_positive && lambda_is_odd_positive(*v.disc.lambda, 10.0 * tol.lambda))
      v.warnings.push_back("lambda within 10x of the odd-lattice tolerance");
  }
  auto decided = [](SchwartzClass c) { return c == SchwartzClass::InS || c == SchwartzClass::NotInSprime; };
  v.regular = decided(v.plus.cls) && decided(v.minus.cls);
  if (v.plus.cls == SchwartzClass::NotInSprime && v.minus.cls == SchwartzClass::InS) {
    v.anomaly = true;
    v.warnings.push_back("anomaly: mirrored root pattern (Xi+ not temperate, Xi- in S)");
  }
  if (!v.regular) return v;
  if (v.plus.cls == SchwartzClass::NotInSprime && v.minus.cls == SchwartzClass::NotInSprime) {
    v.matched = Condition::both_roots_unbounded;
  } else if (v.minus.cls == SchwartzClass::NotInSprime && v.plus.cls == SchwartzClass::InS) {
    if (v.disc.kind == DeltaCase::D2Nonzero) {
      if (!v.lambda_odd_positive) v.matched = Condition::weber_split;
    } else {
      v.matched = Condition::degenerate_split;
    }
  }
  v.injective = v.matched != Condition::none;
  return v;
}

struct Verdict {
  double theta_used = 0.0;
  WeylSymbol symbol;
  SourceVerdict source;
  bool twisted_regular = false;
  std::vector<std::string> warnings;

  Condition matched_condition() const { return source.matched; }
};

/// Shifted Weyl symbol of a source table.
inline WeylSymbol prepared_symbol(const CoeffTable& s, std::optional<double> theta,
                                  const ClassifyTolerances& tol = {}) {
  if (s.top_order_mass() == 0.0) throw order_error("operator is not of order 2");
  const WeylSymbol b0 = weyl_symbol(s);
  const double t = theta ? *theta : choose_theta(b0, OperatorTolerances{tol.zero});
  const WeylSymbol b = symplectic_shift(b0, t);
  if (top_coefficient_vanishes(b, tol.zero))
    throw shift_required_error("shifted symbol has vanishing b20");
  return b;
}

inline Verdict classify_symbol(const WeylSymbol& b, const ClassifyTolerances& tol = {}) {
  Verdict v;
  v.theta_used = b.theta;
  v.symbol = b;
  v.source = classify_source(b, tol);
  v.warnings = v.source.warnings;
  v.twisted_regular = v.source.matched != Condition::none;
  return v;
}

inline Verdict classify_twisted(const TwistedOperator& A, std::optional<double> theta = std::nullopt,
                                const ClassifyTolerances& tol = {}) {
  return classify_symbol(prepared_symbol(source_of(A), theta, tol), tol);
}

}  // namespace twreg
