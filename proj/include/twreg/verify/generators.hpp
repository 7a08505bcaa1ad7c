#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "twreg/branchcut.hpp"
#include "twreg/operators.hpp"

namespace twreg::verify {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Uniform in the disc of the given radius.
  cplx disc(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-pi, pi));
  }

  /// Uniform in the disc, at distance >= margin from every nonpositive integer.
  cplx disc_off_poles(double radius, double margin) {
    for (;;) {
      const cplx z = disc(radius);
      const double n = std::round(z.real());
      if (n > 0.0 || std::abs(z - cplx(n, 0.0)) >= margin) return z;
    }
  }

  TwistedFrame frame() {
    for (;;) {
      const double a = uniform(-2.0, 2.0), b = uniform(-2.0, 2.0), d = uniform(-2.0, 2.0);
      if (std::abs(b) < 0.2 || std::abs(d) < 0.2) continue;
      return {a, b, (a * d - 1.0) / b, d};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

enum class OperatorFamily { Generic, Delta2Zero, Delta21Zero, RealCoefficients, OddLattice };

/// Random second-order source table of the requested family.
inline CoeffTable random_table(Sampler& s, OperatorFamily fam) {
  CoeffTable t{s.disc(), s.disc(), s.disc(), s.disc(), s.disc(), s.disc()};
  switch (fam) {
    case OperatorFamily::Generic:
      break;
    case OperatorFamily::Delta2Zero:
      while (std::abs(t.a20) < 0.3) t.a20 = s.disc();
      t.a02 = t.a11 * t.a11 / (4.0 * t.a20);
      break;
    case OperatorFamily::Delta21Zero:
      while (std::abs(t.a20) < 0.3) t.a20 = s.disc();
      t.a02 = t.a11 * t.a11 / (4.0 * t.a20);
      t.a01 = t.a11 * t.a10 / (2.0 * t.a20);
      break;
    case OperatorFamily::RealCoefficients:
      t = {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
      break;
    case OperatorFamily::OddLattice: {
      // c (D^2 + M^2 - mu), mu on or off the odd lattice
      const double mu = std::floor(s.uniform(0.0, 8.0)) * 0.5;
      const cplx c = s.disc() + cplx(0.5, 0.0);
      t = {c, 0.0, c, 0.0, 0.0, -mu * c};
      break;
    }
  }
  return t;
}

/// Weyl symbol with b20 bounded away from zero whose reduced variable stays moderate on [-span, span].
/// Families with Delta2 = 0 are built on the symbol directly so the case split is exact up to rounding.
inline WeylSymbol random_ode_symbol(Sampler& s, DeltaCase kind, double span) {
  for (;;) {
    WeylSymbol b;
    b.b20 = s.disc();
    if (std::abs(b.b20) < 0.5) continue;
    b.b11 = s.disc();
    b.b02 = s.disc();
    b.b10 = s.disc();
    b.b01 = s.disc();
    b.b00 = s.disc();
    if (kind != DeltaCase::D2Nonzero) b.b02 = b.b11 * b.b11 / (4.0 * b.b20);
    if (kind == DeltaCase::AllZeroQuad) b.b01 = b.b11 * b.b10 / (2.0 * b.b20);
    b.full_const = b.b00 + cplx(0.0, 0.5) * b.b11;
    const auto d = discriminants(b);
    if (d.kind != kind) continue;
    if (kind == DeltaCase::D2Nonzero) {
      if (std::abs(d.d2) < 0.3) continue;
      const SolutionBasis basis(b);
      if (std::max(std::abs(basis.z(span)), std::abs(basis.z(-span))) > 9.0) continue;
    } else if (kind == DeltaCase::D1Nonzero) {
      if (std::abs(d.d1) < 0.3) continue;
      const SolutionBasis basis(b);
      if (std::max(std::abs(basis.z(span)), std::abs(basis.z(-span))) > 12.0) continue;
    }
    return b;
  }
}

}  // namespace twreg::verify
