#include <gtest/gtest.h>

#include "twreg/classify.hpp"
#include "twreg/verify/generators.hpp"

using twreg::CoeffTable;
using twreg::Condition;
using twreg::cplx;
using twreg::End;
using twreg::EndBehavior;
using twreg::GrowthSignature;
using twreg::Root;
using twreg::SchwartzClass;

namespace {

const cplx I(0.0, 1.0);
const twreg::TwistedFrame ref_frame{-1.0, -0.5, 1.0, -0.5};

twreg::WeylSymbol sym(const CoeffTable& t) { return twreg::weyl_symbol(t); }
CoeffTable oscillator(double mu = 0.0) { return {1.0, 0.0, 1.0, 0.0, 0.0, -mu}; }
CoeffTable b2() { return {1.0, 0.0, -1.0, I, 0.0, 0.0}; }
CoeffTable d2_plus(double c) { return {1.0, 0.0, 0.0, 0.0, 0.0, c}; }

void expect_terms(const GrowthSignature& g, std::vector<std::pair<double, cplx>> want) {
  ASSERT_GE(g.terms.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    EXPECT_EQ(g.terms[k].first, want[k].first);
    EXPECT_LE(std::abs(g.terms[k].second - want[k].second), 1e-14) << "term " << k;
  }
}

}  // namespace

TEST(GrowthSignatureTest, Examples) {
  expect_terms(twreg::growth_signature(sym(oscillator()), Root::Plus, End::PlusInf), {{2.0, I}, {1.0, 0.0}});
  expect_terms(twreg::growth_signature(sym(b2()), Root::Plus, End::PlusInf), {{2.0, -1.0}, {1.0, -0.5 * I}});
  expect_terms(twreg::growth_signature(sym(CoeffTable{1.0, 0.0, 0.0, 0.0, -1.0, 0.0}), Root::Minus, End::MinusInf),
               {{2.0, 0.0}, {1.5, -I}});
}

TEST(GrowthSignatureTest, ExponentsDecrease) {
  twreg::verify::Sampler s(2);
  for (auto c : {twreg::DeltaCase::D2Nonzero, twreg::DeltaCase::D1Nonzero, twreg::DeltaCase::AllZeroQuad}) {
    const auto b = twreg::verify::random_ode_symbol(s, c, 4.0);
    for (End e : {End::PlusInf, End::MinusInf}) {
      const auto g = twreg::growth_signature(b, Root::Plus, e);
      for (std::size_t k = 1; k < g.terms.size(); ++k) EXPECT_LT(g.terms[k].first, g.terms[k - 1].first);
    }
  }
}

TEST(EndBehaviorTest, Examples) {
  EXPECT_EQ(twreg::end_behavior({End::PlusInf, {{2.0, I}}}, 1e-12), EndBehavior::PlusInf);
  EXPECT_EQ(twreg::end_behavior({End::PlusInf, {{2.0, -1.0}, {1.0, -0.5 * I}}}, 1e-12), EndBehavior::MinusInf);
  EXPECT_EQ(twreg::end_behavior({End::PlusInf, {{2.0, 3.0}, {1.0, -5.0}}}, 1e-12), EndBehavior::Bounded);
  EXPECT_EQ(twreg::end_behavior({End::PlusInf, {}}, 1e-12), EndBehavior::Bounded);
}

TEST(SchwartzClassTest, Examples) {
  EXPECT_EQ(twreg::schwartz_class(sym(oscillator()), Root::Plus), SchwartzClass::InS);
  EXPECT_EQ(twreg::schwartz_class(sym(oscillator()), Root::Minus), SchwartzClass::NotInSprime);
  for (Root r : {Root::Plus, Root::Minus}) {
    EXPECT_EQ(twreg::schwartz_class(sym(d2_plus(-1.0)), r), SchwartzClass::InSprimeNotS);
    EXPECT_EQ(twreg::schwartz_class(sym(d2_plus(1.0)), r), SchwartzClass::NotInSprime);
  }
}

TEST(LambdaOddPositive, Examples) {
  EXPECT_TRUE(twreg::lambda_is_odd_positive(3.0, 1e-9));
  EXPECT_TRUE(twreg::lambda_is_odd_positive(1.0 + 5e-10, 1e-9));
  EXPECT_FALSE(twreg::lambda_is_odd_positive(0.0, 1e-9));
  EXPECT_FALSE(twreg::lambda_is_odd_positive(-1.0, 1e-9));
  EXPECT_FALSE(twreg::lambda_is_odd_positive(2.0, 1e-9));
  EXPECT_FALSE(twreg::lambda_is_odd_positive(cplx(0.0, 0.25), 1e-9));
  EXPECT_FALSE(twreg::lambda_is_odd_positive(cplx(3.0, 1e-6), 1e-9));
}

TEST(ClassifySource, Examples) {
  const auto ho = twreg::classify_source(sym(oscillator()));
  EXPECT_TRUE(ho.regular);
  ASSERT_TRUE(ho.injective.has_value());
  EXPECT_TRUE(*ho.injective);
  EXPECT_EQ(ho.matched, Condition::weber_split);

  const auto ground = twreg::classify_source(sym(oscillator(1.0)));
  EXPECT_TRUE(ground.regular);
  EXPECT_TRUE(ground.lambda_odd_positive);
  EXPECT_FALSE(*ground.injective);

  const auto free = twreg::classify_source(sym(d2_plus(-1.0)));
  EXPECT_FALSE(free.regular);
  EXPECT_FALSE(free.injective.has_value());

  EXPECT_EQ(twreg::classify_source(sym(d2_plus(1.0))).matched, Condition::both_roots_unbounded);
  EXPECT_EQ(twreg::classify_source(sym(b2())).matched, Condition::both_roots_unbounded);
}

TEST(ClassifySource, EigenvalueFamily) {
  for (double mu : {0.0, 0.5, 1.0, 2.0, 3.0, 4.2, 5.0}) {
    const auto v = twreg::classify_source(sym(oscillator(mu)));
    const bool eigen = mu == 1.0 || mu == 3.0 || mu == 5.0;
    EXPECT_TRUE(v.regular) << mu;
    EXPECT_EQ(*v.injective, !eigen) << mu;
  }
}

TEST(ClassifySource, KernelOfGroundState) {
  // (D^2 + M^2 - 1) e^{-x^2/2} = 0 with D = -i d/dx
  const auto b = sym(oscillator(1.0));
  for (double x : {-2.0, 0.3, 1.7}) {
    const double u = std::exp(-0.5 * x * x);
    EXPECT_LE(std::abs(twreg::apply_operator(b, x, u, -x * u, (x * x - 1.0) * u)), 1e-15);
  }
}

TEST(ClassifySource, AdjointConsistency) {
  twreg::verify::Sampler s(31);
  for (int k = 0; k < 100; ++k) {
    const auto fam = static_cast<twreg::verify::OperatorFamily>(k % 5);
    const auto b = twreg::prepared_symbol(twreg::verify::random_table(s, fam), std::nullopt);
    EXPECT_EQ(twreg::classify_source(b).regular, twreg::classify_source(b.conj()).regular) << k;
  }
}

TEST(ClassifySource, ScaleInvariance) {
  twreg::verify::Sampler s(37);
  for (int k = 0; k < 60; ++k) {
    const auto fam = static_cast<twreg::verify::OperatorFamily>(k % 5);
    const auto t = twreg::verify::random_table(s, fam);
    const auto base = twreg::classify_source(twreg::prepared_symbol(t, std::nullopt));
    for (cplx c : {cplx(-2.5, 0.0), cplx(0.3, 0.7)}) {
      const auto v = twreg::classify_source(twreg::prepared_symbol(t.scaled(c), std::nullopt));
      EXPECT_EQ(v.regular, base.regular);
      EXPECT_EQ(v.matched, base.matched);
      EXPECT_EQ(v.plus.cls, base.plus.cls);
      EXPECT_EQ(v.minus.cls, base.minus.cls);
      if (base.disc.lambda) {
        EXPECT_LE(std::abs(*v.disc.lambda - *base.disc.lambda), 1e-9) << k;
      }
    }
  }
}

TEST(ClassifyTwisted, Examples) {
  const auto lap = twreg::classify_twisted({{1.0, 0.0, 1.0, 0.0, 0.0, 0.0}, ref_frame});
  EXPECT_TRUE(lap.twisted_regular);
  EXPECT_EQ(lap.matched_condition(), Condition::weber_split);
  const auto a1 = twreg::classify_twisted({{1.0, 0.0, 0.0, 0.0, 0.0, 1.0}, ref_frame});
  EXPECT_TRUE(a1.twisted_regular);
  EXPECT_EQ(a1.matched_condition(), Condition::both_roots_unbounded);
  for (const twreg::TwistedFrame& f : {ref_frame, twreg::TwistedFrame{1.0, 1.0, 0.0, 1.0}})
    EXPECT_FALSE(twreg::classify_twisted({oscillator(1.0), f}).twisted_regular);
  EXPECT_THROW(twreg::classify_twisted({{0.0, 0.0, 0.0, 1.0, 0.0, 0.0}, ref_frame}), twreg::order_error);
  EXPECT_THROW(twreg::classify_twisted({oscillator(), twreg::TwistedFrame{1.0, 0.0, 0.0, 1.0}}),
               twreg::frame_error);
}

TEST(ClassifyTwisted, ThetaInvariance) {
  twreg::verify::Sampler s(41);
  for (int k = 0; k < 60; ++k) {
    const auto fam = static_cast<twreg::verify::OperatorFamily>(k % 5);
    const twreg::TwistedOperator A{twreg::verify::random_table(s, fam), s.frame()};
    std::optional<twreg::Verdict> first;
    for (double theta : {0.0, 1.0, 2.0}) {
      const auto b = twreg::symplectic_shift(twreg::weyl_symbol(A.coeffs), theta);
      if (twreg::top_coefficient_vanishes(b, 1e-12)) continue;
      const auto v = twreg::classify_twisted(A, theta);
      if (!first) {
        first = v;
        continue;
      }
      EXPECT_EQ(v.twisted_regular, first->twisted_regular) << k << " theta=" << theta;
      EXPECT_EQ(v.source.regular, first->source.regular) << k << " theta=" << theta;
    }
  }
}
