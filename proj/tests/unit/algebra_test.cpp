#include <gtest/gtest.h>

#include "slq/algebra.hpp"
#include "slq/rewriting.hpp"
#include "support.hpp"

namespace slq {
namespace {

using test::ow;
using test::qp;

const AlgebraElement one = unit_element();

TEST(Pbw, MakeRejectsInvalid) {
  EXPECT_THROW(PbwMonomial::make(1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(PbwMonomial::make(-1, 0, 0, 0), std::invalid_argument);
  EXPECT_EQ(PbwMonomial::make(2, 1, 0, 0).degree(), 3);
}

TEST(NormalForm, DefiningWords) {
  using G = Generator;
  EXPECT_EQ(normal_form({G::D, G::A}), one + qp(1) * monomial_element(0, 1, 1, 0));
  EXPECT_EQ(normal_form({G::B, G::A}), qp(1) * monomial_element(1, 1, 0, 0));
  EXPECT_EQ(normal_form({G::A, G::D}), one + qp(-1) * monomial_element(0, 1, 1, 0));
  EXPECT_EQ(normal_form({}), one);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(alpha() * delta(), one + qp(-1) * (beta() * gamma()));
  const AlgebraElement x = alpha() + 2 * qp(1) * gamma();
  EXPECT_EQ(one * x, x);
  EXPECT_EQ(x * one, x);
  // gamma alpha = q alpha gamma, so the middle coefficient is 1 + q.
  const AlgebraElement s = alpha() + gamma();
  EXPECT_EQ(s * s, monomial_element(2, 0, 0, 0) + (QScalar(1) + qp(1)) * monomial_element(1, 0, 1, 0) +
                       monomial_element(0, 0, 2, 0));
  EXPECT_EQ(s * s, test::oracle_product(s, s));
}

TEST(LinearCombine, Examples) {
  const std::pair<QScalar, AlgebraElement> cancel[] = {{QScalar(1), alpha()}, {QScalar(-1), alpha()}};
  EXPECT_TRUE(linear_combine(cancel).is_zero());
  const std::pair<QScalar, AlgebraElement> z[] = {{-qp(-1), beta() * gamma()}};
  EXPECT_EQ(linear_combine(z), zeta());
}

TEST(Power, Examples) {
  EXPECT_EQ(power(delta(), 2), monomial_element(0, 0, 0, 2));
  EXPECT_EQ(power(alpha() * delta(), 1), one + qp(-1) * monomial_element(0, 1, 1, 0));
  EXPECT_EQ(power(alpha(), 0), one);
  // (alpha + gamma)^3 = sum_k [3 k]_q alpha^k gamma^{3-k}
  AlgebraElement expected;
  for (int k = 0; k <= 3; ++k) expected += QScalar(test::gauss_binomial(3, k, 1)) * monomial_element(k, 0, 3 - k, 0);
  EXPECT_EQ(power(alpha() + gamma(), 3), expected);
}

TEST(Words, RoundTrip) {
  const PbwMonomial m = PbwMonomial::make(0, 2, 1, 3);
  EXPECT_EQ(to_word(m).size(), 6u);
  EXPECT_EQ(normal_form(to_word(m)), AlgebraElement::basis(m));
}

TEST(ExtendOnGenerators, AntiAlgebraMap) {
  // alpha <-> delta respects the relations as an anti-algebra map.
  const std::array<AlgebraElement, 4> images{delta(), beta(), gamma(), alpha()};
  const AlgebraElement x = alpha() * beta();
  EXPECT_EQ(extend_on_generators(x, images, true), beta() * delta());
  EXPECT_EQ(extend_on_generators(x, images, false), delta() * beta());
}

// Structured product against the string oracle kept in test code.
TEST(AlgebraProperty, StructuredProductMatchesOracle) {
  test::Gen gen(test::kSeed);
  for (int i = 0; i < 150; ++i) {
    const PbwMonomial x = gen.monomial(4), y = gen.monomial(4);
    EXPECT_EQ(multiply_monomials(x, y), test::oracle_product(AlgebraElement::basis(x), AlgebraElement::basis(y)))
        << test::word_of(x) << " * " << test::word_of(y);
  }
}

TEST(AlgebraProperty, RewritingEngineMatchesOracle) {
  test::Gen gen(test::kSeed + 3);
  for (int i = 0; i < 150; ++i) {
    const std::string w = gen.word(7);
    Word word;
    for (char ch : w) word.push_back(static_cast<Generator>(ch - 'a'));
    const AlgebraElement expected = ow(w);
    EXPECT_EQ(rewrite_word(word, RewriteStrategy::leftmost), expected) << w;
    EXPECT_EQ(rewrite_word(word, RewriteStrategy::rightmost), expected) << w;
    EXPECT_EQ(normal_form(word), expected) << w;
  }
}

TEST(AlgebraProperty, Associativity) {
  test::Gen gen(test::kSeed + 4);
  for (int i = 0; i < 40; ++i) {
    const AlgebraElement x = gen.element(4), y = gen.element(4), z = gen.element(4);
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(AlgebraProperty, RelationsAreFixpoints) {
  const QScalar qi = qp(-1);
  EXPECT_EQ(alpha() * beta(), qi * (beta() * alpha()));
  EXPECT_EQ(alpha() * gamma(), qi * (gamma() * alpha()));
  EXPECT_EQ(beta() * delta(), qi * (delta() * beta()));
  EXPECT_EQ(gamma() * delta(), qi * (delta() * gamma()));
  EXPECT_EQ(beta() * gamma(), gamma() * beta());
  EXPECT_EQ(alpha() * delta() - delta() * alpha(), (qi - qp(1)) * (beta() * gamma()));
  EXPECT_EQ(alpha() * delta() - qi * (beta() * gamma()), one);
  EXPECT_EQ(delta() * alpha() - qp(1) * (beta() * gamma()), one);
}

TEST(AlgebraProperty, AppendixProducts) {
  for (int j = 1; j <= 8; ++j) {
    AlgebraElement ad = one, da = one;
    for (int i = 1; i <= j; ++i) {
      ad = ad * (one - qp(-2 * (i - 1)) * zeta());
      da = da * (one - qp(2 * i) * zeta());
    }
    EXPECT_EQ(power(alpha(), j) * power(delta(), j), ad) << j;
    EXPECT_EQ(power(delta(), j) * power(alpha(), j), da) << j;
  }
}

}  // namespace
}  // namespace slq
