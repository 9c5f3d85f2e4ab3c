#include <gtest/gtest.h>

#include "slq/hopf.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::qp;

TensorAA pure(const AlgebraElement& x, const AlgebraElement& y) { return TensorAA::pure(x, y); }

TEST(Coproduct, Generators) {
  EXPECT_EQ(coproduct(alpha()), pure(alpha(), alpha()) + pure(beta(), gamma()));
  EXPECT_EQ(coproduct(beta()), pure(alpha(), beta()) + pure(beta(), delta()));
  EXPECT_EQ(coproduct(gamma()), pure(gamma(), alpha()) + pure(delta(), gamma()));
  EXPECT_EQ(coproduct(delta()), pure(gamma(), beta()) + pure(delta(), delta()));
  EXPECT_EQ(coproduct(unit_element()), TensorAA::unit());
}

TEST(Coproduct, IsMultiplicativeOnWords) {
  // Delta(beta gamma) from the generator values, multiplied leg-wise by hand.
  const TensorAA db = coproduct(beta()), dc = coproduct(gamma());
  TensorAA expected;
  for (const auto& [k1, c1] : db.terms())
    for (const auto& [k2, c2] : dc.terms())
      expected += (c1 * c2) * pure(test::oracle_product(AlgebraElement::basis(std::get<0>(k1)),
                                                        AlgebraElement::basis(std::get<0>(k2))),
                                   test::oracle_product(AlgebraElement::basis(std::get<1>(k1)),
                                                        AlgebraElement::basis(std::get<1>(k2))));
  EXPECT_EQ(coproduct(beta() * gamma()), expected);
}

TEST(Counit, Values) {
  EXPECT_EQ(counit(alpha()), QScalar(1));
  EXPECT_EQ(counit(delta()), QScalar(1));
  EXPECT_EQ(counit(beta()), QScalar());
  EXPECT_EQ(counit(gamma()), QScalar());
  EXPECT_EQ(counit(monomial_element(3, 0, 0, 0, qp(2))), qp(2));
  EXPECT_EQ(counit(monomial_element(1, 1, 0, 0)), QScalar());
}

TEST(Antipode, Values) {
  EXPECT_EQ(antipode(alpha()), delta());
  EXPECT_EQ(antipode(delta()), alpha());
  EXPECT_EQ(antipode(beta()), -qp(1) * beta());
  EXPECT_EQ(antipode(gamma()), -qp(-1) * gamma());
  // S(alpha beta) = S(beta) S(alpha) = -q beta delta
  EXPECT_EQ(antipode(alpha() * beta()), -qp(1) * test::ow("bd"));
}

TEST(Pi, Values) {
  EXPECT_EQ(project_pi(alpha()), z_power(1));
  EXPECT_EQ(project_pi(delta()), z_power(-1));
  EXPECT_TRUE(project_pi(beta()).is_zero());
  EXPECT_EQ(project_pi(AlgebraElement(monomial_element(0, 0, 0, 3))), z_power(-3));
}

TEST(LaurentHopf, Structure) {
  const HElement h = z_power(2, qp(1)) + z_power(-1, QScalar(3));
  EXPECT_EQ(h_counit(h), qp(1) + QScalar(3));
  EXPECT_EQ(h_antipode(h), z_power(-2, qp(1)) + z_power(1, QScalar(3)));
  EXPECT_EQ(h_coproduct(z_power(2)), TensorHH::pure(z_power(2), z_power(2)));
  const auto ops = h_hopf_ops(z_power(-4));
  EXPECT_EQ(ops.counit, QScalar(1));
  EXPECT_EQ(ops.antipode, z_power(4));
}

TEST(ApplyLeg, LegWiseMaps) {
  const TensorAA d = coproduct(alpha());
  EXPECT_EQ(apply_leg<Leg::right>(d, Pi{}), TensorAH::pure(alpha(), z_power(1)));
  EXPECT_EQ(apply_leg<Leg::left>(d, Pi{}), TensorHA::pure(z_power(1), alpha()));
  EXPECT_EQ(apply_leg<Leg::left>(d, Counit{}), alpha());
  EXPECT_EQ(apply_leg<Leg::left>(d, Antipode{}), pure(delta(), alpha()) + pure(-qp(1) * beta(), gamma()));
}

TEST(HopfProperty, Axioms) {
  test::Gen gen(test::kSeed);
  for (int i = 0; i < 60; ++i) {
    const PbwMonomial m = gen.monomial(4);
    const TensorAA& d = coproduct(m);
    const auto lhs = expand_left<LegA, LegA>(d, [](const PbwMonomial& x) { return coproduct(x); });
    const auto rhs = expand_right<LegA, LegA>(d, [](const PbwMonomial& x) { return coproduct(x); });
    EXPECT_TRUE(lhs == rhs) << test::word_of(m);
    const AlgebraElement e = AlgebraElement::basis(m);
    EXPECT_EQ(apply_leg<Leg::left>(d, Counit{}), e);
    EXPECT_EQ(apply_leg<Leg::right>(d, Counit{}), e);
    EXPECT_EQ(multiply_legs(apply_leg<Leg::left>(d, Antipode{})), unit_element(counit(m)));
    EXPECT_EQ(multiply_legs(apply_leg<Leg::right>(d, Antipode{})), unit_element(counit(m)));
  }
}

TEST(HopfProperty, Morphisms) {
  test::Gen gen(test::kSeed + 1);
  for (int i = 0; i < 25; ++i) {
    const AlgebraElement x = gen.element(3), y = gen.element(3);
    EXPECT_EQ(coproduct(x * y), coproduct(x) * coproduct(y));
    EXPECT_EQ(counit(x * y), counit(x) * counit(y));
    EXPECT_EQ(antipode(x * y), antipode(y) * antipode(x));
    EXPECT_EQ(project_pi(x * y), project_pi(x) * project_pi(y));
    EXPECT_EQ(project_both(coproduct(x)), h_coproduct(project_pi(x)));
  }
}

}  // namespace
}  // namespace slq
